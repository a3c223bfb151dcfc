import pytest

from bilevel_problems import (
    ParameterOutOfRange,
    UnknownProblem,
    instantiate,
    list_problems,
    lookup,
    names,
    record,
    records,
    registry_size,
)
from bilevel_problems.core import Dimensions
from bilevel_problems.registry import STATUSES, aliases

EQUALITY_NAMES = ["DempeDutta2012Ex31", "DempeFranke2011Ex41", "DempeFranke2011Ex42", "Zlobec2001b"]


def test_count_and_order():
    assert registry_size() == 124
    assert names() == sorted(names())
    assert list_problems() == names()


def test_alias_resolves():
    assert aliases() == {"MitsosBarton06Ex319": "MitsosBarton2006Ex319"}
    assert record("MitsosBarton06Ex319").name == "MitsosBarton2006Ex319"


def test_lookup_examples():
    problem, rec = lookup("ShimizuEtal1997a")
    assert rec.dims == Dimensions(1, 1, 0, 3) == problem.dims
    assert rec.label_string == "N-O-N-L"
    sol = record("MitsosBarton2006Ex39").known_solutions[0]
    assert (sol.x, sol.y, sol.status) == ((-1.0,), (-1.0,), "global")
    with pytest.raises(UnknownProblem):
        lookup("NoSuchProblem1999")


def test_flag_sets():
    assert list_problems(lambda r: "has_equality_origin" in r.flags) == EQUALITY_NAMES
    assert list_problems(lambda r: "no_optimal_solution" in r.flags) == ["Zlobec2001b"]
    assert sorted(n for n in names() if "lower_level_kkt_checkable" not in record(n).flags) == [
        "LuDebSinha2016a", "LuDebSinha2016c", "Mirrlees1999", "MorganPatrone2006b", "MorganPatrone2006c",
    ]
    assert "CalamaiVicente1994a" in list_problems(lambda r: r.dims.n_G == 0)


def test_equality_split_dims_and_labels():
    rec = record("DempeDutta2012Ex31")
    assert rec.equality_dims == (1, 0)
    assert rec.dims.n_G == 4
    assert rec.full_labels == "LLNNNO"
    assert record("Zlobec2001b").equality_dims == (0, 1)


@pytest.mark.parametrize("rec", records(), ids=lambda r: r.name)
def test_record_invariants(rec):
    assert (rec.labels[1] == "O") == (rec.dims.n_G == 0)
    assert (rec.labels[3] == "O") == (rec.dims.n_g == 0)
    for s in rec.known_solutions:
        assert s.status in STATUSES
        if s.x is not None:
            assert len(s.x) == rec.dims.n_x and len(s.y) == rec.dims.n_y


def test_parameters():
    one = [(s.x, s.y) for s in record("CalamaiVicente1994a", {"rho": 1}).known_solutions]
    assert one == [((1.0,), (0.0,))]
    two = [(s.x, s.y) for s in record("CalamaiVicente1994a", {"rho": 2}).known_solutions]
    assert two == [((0.5,), (0.5,)), ((1.5,), (0.5,))]
    assert [(s.x, s.y) for s in record("HenrionSurowiec2011", {"c": 0}).known_solutions] == [((0.0,), (0.0,))]
    assert instantiate("HenrionSurowiec2011", {"c": 3}).params == {"c": 3.0}
    with pytest.raises(ParameterOutOfRange):
        instantiate("CalamaiVicente1994a", {"rho": 0.5})
    with pytest.raises(ParameterOutOfRange):
        instantiate("CalamaiVicente1994a", {"nope": 1})


def test_value_only_and_conflicts():
    sols = record("Bard1988Ex3").known_solutions
    assert [(s.status, s.claimed_F, s.claimed_f) for s in sols] == [("value_only", -12.68, -1.02)]
    sols = record("CalamaiVicente1994c").known_solutions
    assert [(s.status, s.claimed_F, s.claimed_f) for s in sols] == [("value_only", 0.3125, None)]
    bard2 = record("Bard1988Ex2")
    assert [(s.claimed_F, s.claimed_f) for s in bard2.known_solutions] == [(-6600, 57.48), (-6600, 54)]
    assert any(n.startswith("claim_conflict:") for n in bard2.notes)


def test_families_sampled():
    xs = [s.x[0] for s in record("IshizukaAiyoshi1992a").known_solutions]
    assert xs == [0.0, 5.0, 10.0]
    xs = [s.x[0] for s in record("MitsosBarton2006Ex310").known_solutions]
    assert xs == [0.1, 0.55, 1.0]


def test_unknown_solutions_are_empty():
    for n in ("BardBook1998", "CalamaiVicente1994b", "LuDebSinha2016e", "LuDebSinha2016f"):
        assert record(n).known_solutions == ()


def test_dempe_lohse_b_has_no_global():
    statuses = [s.status for s in record("DempeLohse2011Ex31b").known_solutions]
    assert statuses == ["local", "best_known"]
