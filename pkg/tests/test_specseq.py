import pytest

from cpss.abelian import format_group, is_isomorphic
from cpss.errors import DomainError, OutOfTableError
from cpss.specseq import (
    CP,
    INDETERMINATE,
    RP,
    UNTESTABLE,
    chart_cells,
    d1,
    e1_page,
    e2_cell,
    e2_closed_form,
    e2_page,
    page,
    periodicity_check,
    pinned_cross_check,
    pinned_d2,
    render_chart,
)
from cpss.stems import stem_group

# transcribed from the printed charts, row by row from the top
E1_CHART = {
    11: ["Z_6", "Z_2+Z_2+Z_2", "Z_2+Z_2", "Z_240", "Z_2", "0"],
    10: ["Z_2+Z_2+Z_2", "Z_2+Z_2", "Z_240", "Z_2", "0", "0"],
    9: ["Z_2+Z_2", "Z_240", "Z_2", "0", "0", "Z_24"],
    8: ["Z_240", "Z_2", "0", "0", "Z_24", "Z_2"],
    7: ["Z_2", "0", "0", "Z_24", "Z_2", "Z_2"],
    6: ["0", "0", "Z_24", "Z_2", "Z_2", "Z"],
    5: ["0", "Z_24", "Z_2", "Z_2", "Z", "0"],
    4: ["Z_24", "Z_2", "Z_2", "Z", "0", "0"],
    3: ["Z_2", "Z_2", "Z", "0", "0", "0"],
    2: ["Z_2", "Z", "0", "0", "0", "0"],
    1: ["Z", "0", "0", "0", "0", "0"],
}
E2_CHART = {
    8: ["Z_2", "Z_120", "Z_2", "0", "0", "Z_24"],
    7: ["Z_240", "Z_2", "0", "0", "Z_12", "0"],
    6: ["Z_2", "0", "0", "Z_24", "0", "0"],
    5: ["0", "0", "Z_12", "0", "0", "Z"],
    4: ["0", "Z_24", "0", "0", "Z", "0"],
    3: ["Z_12", "0", "0", "Z", "0", "0"],
    2: ["0", "0", "Z", "0", "0", "0"],
    1: ["0", "Z", "0", "0", "0", "0"],
}


def test_e1_chart():
    cells = chart_cells(e1_page(CP, 6, 10))
    for j, row in E1_CHART.items():
        for i, g in enumerate(row):
            assert cells[i, j] == g, (i, j)


def test_e2_chart():
    cells = chart_cells(e2_page(CP, 6, 10))
    for j, row in E2_CHART.items():
        for i, g in enumerate(row):
            assert cells[i, j] == g, (i, j)


def test_e2_chart_labels():
    cells = chart_cells(e2_page(CP, 6, 10), labels=True)
    assert cells[0, 3] == "Z_12⟨ν⟩"
    assert cells[2, 2] == "Z⟨ι_3⟩"
    assert cells[1, 2].startswith("0")


def test_render_chart_contains_rows():
    text = render_chart(e2_page(CP, 6, 10))
    assert "Z_240" in text and "Z_120" in text
    assert text.splitlines()[0] == "E^2 (CP)"


def test_d1_arrows():
    for s in (1, 3, 5):
        for m in range(10):
            assert d1(CP, s, m).is_zero()
    f = d1(CP, 2, 0)
    assert f(f.domain.gen(0)) == stem_group(1).gen(0)
    for s in (2, 4, 6):
        g = d1(CP, s, 2)
        assert g(g.domain.gen(0)).coords == (12,)
    h = d1(CP, 2, 7)
    assert h(h.domain.gen(0)) == stem_group(8).gen("ν̄") + stem_group(8).gen("ε")


@pytest.mark.parametrize("s", range(1, 7))
@pytest.mark.parametrize("m", range(0, 8))
def test_closed_form(s, m):
    cell = e2_cell(CP, s, m)
    if cell.status != INDETERMINATE:
        assert is_isomorphic(cell.group, e2_closed_form(CP, s, m))


def test_indeterminate_cells():
    assert e2_cell(CP, 2, 8).status == INDETERMINATE
    assert e2_cell(CP, 3, 9).status == INDETERMINATE
    assert page(CP, 2, 4, 10).cell(2, 8).text() == "?"


def test_p_local_pages():
    pg = e2_page(CP, 6, 10, p=3)
    assert format_group(pg[1, 3]) == "Z_3"
    assert format_group(pg[3, 7]) == "Z_3"
    # odd torsion never meets η, so nothing is indeterminate 3-locally
    assert all(c.status != INDETERMINATE for c in pg.cells.values())


def test_rp_page():
    pg = e2_page(RP, 8, 8)
    assert [format_group(pg[s, 0]) for s in range(1, 7)] == ["Z_2", "0", "Z_2", "0", "Z_2", "0"]
    assert format_group(pg[2, 3]) == "Z_2"
    assert format_group(pg[3, 8]) == "Z_2+Z_2"


def test_periodicity():
    assert periodicity_check(CP, 1, 2).passed
    assert periodicity_check(CP, 1, 2, p=2).passed
    assert periodicity_check(CP, 2, 3, p=2).passed
    assert periodicity_check(CP, 2, 3).status == UNTESTABLE
    assert periodicity_check(RP, 1, 2).passed
    with pytest.raises(DomainError):
        periodicity_check(CP, 2, 2)


def test_pinned():
    assert pinned_cross_check(3) and pinned_cross_check(5)
    assert pinned_d2(3).chart_label == "4ν"
    assert pinned_d2(3).representative.coords == (2,)
    assert pinned_d2(7) is None


def test_page_errors():
    with pytest.raises(OutOfTableError):
        e2_page(CP, 3, 11)
    with pytest.raises(DomainError):
        page(CP, 3, 3, 3)
    with pytest.raises(DomainError):
        e1_page("hp", 3, 3)
