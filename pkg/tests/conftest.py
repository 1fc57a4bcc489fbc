import pytest

import quandlekit as qk


@pytest.fixture(scope="session")
def golden():
    """The embedded 12-element connected quandle."""
    return qk.smallquandle_12_4()


def _build_catalog():
    """Connected instances exercised by the property suites.

    Mix of enumerated tables, class quandles, affine quandles, and
    non-quandle racks; every entry is connected.
    """
    entries = [("golden-12", qk.smallquandle_12_4())]
    for n in range(1, 7):
        for i, rack in enumerate(qk.enumerate_connected_quandles(n), start=1):
            entries.append((f"enum-{n}-{i}", rack))
    s4 = qk.symmetric_group(4)
    s5 = qk.symmetric_group(5)
    entries.append((
        "class-s4-transpositions",
        qk.conjugacy_class_quandle(
            s4, qk.Permutation.from_cycles(4, [[0, 1]])).rack,
    ))
    entries.append((
        "class-s4-4cycles",
        qk.conjugacy_class_quandle(
            s4, qk.Permutation.from_cycles(4, [[0, 1, 2, 3]])).rack,
    ))
    entries.append((
        "class-s5-32",
        qk.conjugacy_class_quandle(
            s5, qk.Permutation.from_cycles(5, [[0, 1, 2], [3, 4]])).rack,
    ))
    entries.append((
        "affine-z7-a3", qk.affine_quandle(qk.make_affine_spec([7], 3)).rack,
    ))
    entries.append((
        "affine-z3z3-fib",
        qk.affine_quandle(
            qk.make_affine_spec([3, 3],
                                lambda t: (t[1], (t[0] + t[1]) % 3))).rack,
    ))
    for n in (2, 3, 5):
        entries.append((f"cycle-rack-{n}", qk.cyclic_permutation_rack(n)))
    for name, rack in entries:
        assert qk.is_connected(rack), name
    return entries


@pytest.fixture(scope="session")
def catalog():
    return _build_catalog()


@pytest.fixture(scope="session")
def connected_quandle_catalog(catalog):
    return [(name, rack) for name, rack in catalog if rack.is_quandle]
