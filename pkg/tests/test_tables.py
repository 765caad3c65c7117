import pytest

from hermsig import tables

# rows copied by hand for specific n (D3 is labelled A3 and C2 is labelled B2)
LITERAL = {
    "A5": ("C3", "A3", "A1^3", "A2", "A1", (24, 2), (6, 8)),
    "A7": ("C4", "D4", "A1^4", "A3", "A1", (192, 2), (24, 16)),
    "A4": ("BC2", "B2", "A1^2", "A1", "∅", (8, 1), (2, 4)),
    "D5": ("B4", "A1^4", "D4", "A1", "A3", (16, 24), (2, 192)),
    "E6": ("F4", "D4", "D4", "A2", "A2", (192, 6), (6, 192)),
}


def test_every_row_matches():
    rows = tables.table3()
    assert len(rows) == 10
    for got, want, bad in rows:
        assert bad == [], got.name


@pytest.mark.parametrize("name", sorted(LITERAL))
def test_literal_rows(name):
    row = tables.computed_row(name[0], int(name[1:]))
    got = tuple(getattr(row, c) for c in tables.COLUMNS) + (row.cplx_by_sing_imag, row.sing_cplx_by_imag)
    assert got == LITERAL[name]


@pytest.mark.parametrize("family,rank", tables.table_groups())
def test_expected_row_formulas(family, rank):
    want = tables.expected_row(family, rank)
    a, b = want.cplx_by_sing_imag
    c, d = want.sing_cplx_by_imag
    assert a * b == c * d


def test_no_row_for_other_types():
    with pytest.raises(ValueError):
        tables.expected_row("B", 3)


def test_folds():
    checks = tables.fold_checks()
    assert len(checks) == 6
    for group, key, ok, picture in checks:
        assert ok, (group, key, picture)


def test_theta_on_e6_diagram():
    theta = tables.theta_on_diagram("split(E6)")
    assert {int(k): v for k, v in theta.items()} == {1: 6, 2: 5, 3: 3, 4: 4, 5: 2, 6: 1}
