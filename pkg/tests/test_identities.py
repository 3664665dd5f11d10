"""Seeded verification of the quadratic-map identity catalogue."""

import pytest

from jsbo.domains import DESK_DOMAINS, DomainSpec
from jsbo.identities import (
    SUITE,
    IdentityFailure,
    d_orthogonal_split,
    run_identity,
    run_suite,
)


def test_suite_names_cover_catalogue():
    assert set(SUITE) == {
        "det_b", "bergman_left", "bergman_right", "quasiinv_add",
        "quasiinv_twice", "projlemma", "projprop", "bergman_decomp",
    }


@pytest.mark.parametrize("name", DESK_DOMAINS)
def test_desk_suite_reduced_points(name):
    # the full 100-point sweep lives in the acceptance suite
    dom = DomainSpec.parse(name)
    report = run_suite(dom, seed=42, points=10)
    assert set(report) == set(SUITE)
    assert report["det_b"] == 1  # symbolic, one check
    assert all(v >= 10 for k, v in report.items() if k != "det_b"), report


def test_point_identities_other_sizes():
    for name in ("SYM(3)", "MAT(1,2)", "QUADRIC(4)"):
        dom = DomainSpec.parse(name)
        for ident in ("bergman_left", "quasiinv_add", "quasiinv_twice"):
            run_identity(dom, ident, seed=1, points=5)


def test_d_orthogonal_split_kills_mixed_action():
    # D(x1, y2) must vanish identically when the supports are split
    for name in ("SYM(2)", "MAT(2,2)", "SKEW(4)"):
        dom = DomainSpec.parse(name)
        s1, s2 = d_orthogonal_split(dom)
        assert s1 and s2
        x1 = dom.sym_matrix("x", support=s1)
        y2 = dom.sym_matrix("y", support=s2)
        z = dom.sym_matrix("z")
        out = dom.d_apply(x1, y2, z)
        for row in out:
            for entry in row:
                assert entry.is_zero()


def test_quadric_split_is_trivial():
    dom = DomainSpec.parse("QUADRIC(3)")
    s1, s2 = d_orthogonal_split(dom)
    assert set(s1) == set(dom.free_coords())
    assert s2 == []


def test_failure_reporting():
    dom = DomainSpec.parse("SYM(2)")
    with pytest.raises(KeyError):
        run_identity(dom, "not_an_identity", seed=0, points=1)
    err = IdentityFailure(dom, "det_b", "synthetic")
    assert "det_b" in str(err)
