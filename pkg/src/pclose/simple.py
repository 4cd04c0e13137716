"""Labels for finite simple groups identified by order.

Covers every nonabelian simple group of order below 10^6 and the groups
L2(2^k) for larger k.  The only order collision in range, 20160 (A8 and
L3(4)), is resolved by whether an element of order 15 exists.
"""

from __future__ import annotations

from sympy import factorint, isprime


def _l2_order(q: int) -> int:
    d = 1 if q % 2 == 0 else 2
    return q * (q * q - 1) // d


def _prime_powers(limit: int):
    for q in range(4, limit):
        f = factorint(q)
        if len(f) == 1:
            yield q


def _build_table() -> dict[int, list[str]]:
    table: dict[int, list[str]] = {}

    def add(order: int, label: str) -> None:
        labels = table.setdefault(order, [])
        if label not in labels:
            labels.append(label)

    special = {4: "A5", 5: "A5", 9: "A6"}
    for q in _prime_powers(130):
        order = _l2_order(q)
        if order < 10**6:
            add(order, special.get(q, f"L2({q})"))
    for k in range(7, 13):
        add(_l2_order(2**k), f"L2({2**k})")
    for order, label in [
        (2520, "A7"),
        (20160, "A8"),
        (20160, "L3(4)"),
        (181440, "A9"),
        (5616, "L3(3)"),
        (372000, "L3(5)"),
        (6048, "U3(3)"),
        (62400, "U3(4)"),
        (126000, "U3(5)"),
        (25920, "U4(2)"),
        (29120, "Sz(8)"),
        (979200, "S4(4)"),
        (7920, "M11"),
        (95040, "M12"),
        (443520, "M22"),
        (175560, "J1"),
        (604800, "J2"),
    ]:
        add(order, label)
    return table


SIMPLE_ORDERS = _build_table()


def cyclic_label(p: int) -> str:
    return f"C{p}"


def is_cyclic_label(label: str) -> bool:
    return label.startswith("C") and label[1:].isdigit() and isprime(int(label[1:]))


def label_candidates(order: int) -> list[str]:
    if isprime(order):
        return [cyclic_label(order)]
    return list(SIMPLE_ORDERS.get(order, []))


def label_for(order: int, has_element_of_order_15: bool | None = None) -> str | None:
    """Label of the simple group of the given order, None if unknown."""
    cands = label_candidates(order)
    if not cands:
        return None
    if len(cands) == 1:
        return cands[0]
    if order == 20160 and has_element_of_order_15 is not None:
        return "A8" if has_element_of_order_15 else "L3(4)"
    return None


def label_order(label: str) -> int | None:
    if is_cyclic_label(label):
        return int(label[1:])
    for order, labels in SIMPLE_ORDERS.items():
        if label in labels:
            return order
    return None
