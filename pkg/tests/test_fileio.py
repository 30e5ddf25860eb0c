import random

import pytest

from kpeaked import fileio
from kpeaked.control import DvInstance, validate
from kpeaked.election import InputError
from kpeaked.generate import random_instance, random_mrsp
from kpeaked.graphs import Graph
from kpeaked.reductions import as_groups

from conftest import DATA


def test_three_voter_file_round_trips():
    text = (DATA / "small_election.txt").read_text()
    inst = fileio.load_election(text)
    assert isinstance(inst, DvInstance)
    assert inst.election.scores().tolist() == [3, 1, 2]
    assert fileio.write_election(inst) == text
    assert fileio.write_election_file(fileio.parse_election(text)) == text


def test_empty_unregistered_section_gives_deleting_votes_instance():
    text = (DATA / "small_election.txt").read_text()
    ef = fileio.parse_election(text)
    assert ef.unregistered == []
    inst = fileio.to_instance(ef, problem="dv", budget=1)
    assert validate(inst) == []


def test_canonicalisation():
    messy = """# comment
candidates:  a   b c
r: 1   # trailing
distinguished: b

[registered]
2:a>b>c
"""
    ef = fileio.parse_election(messy)
    assert fileio.write_election_file(ef) == (
        "candidates: a b c\nr: 1\ndistinguished: b\n[registered]\n2: a > b > c\n[unregistered]\n"
    )


@pytest.mark.parametrize("problem", ["av", "dv", "ac", "dc"])
def test_random_instances_are_fixpoints(problem):
    for seed in range(250):
        rng = random.Random(seed)
        m = rng.randint(3, 9)
        inst = random_instance(problem, m, rng.randint(1, m - 1), rng.randint(1, 3), rng.randint(0, 6),
                               rng.randint(0, 3), unregistered=rng.randint(0, 5),
                               spoilers=rng.randint(0, m - 1), seed=seed)
        once = fileio.write_election(inst)
        back = fileio.load_election(once)
        assert fileio.write_election(back) == once
        assert back.election == inst.election and back.axis == inst.axis and back.k == inst.k


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("candidates: a b\nr: x\n", 2, 4),
        ("candidates: a b\nr: 1\ncolour: red\n", 3, 1),
        ("candidates: a b\nr: 1\ndistinguished: a\n[voters]\n", 4, 1),
        ("candidates: a b\nr: 1\ndistinguished: a\n[registered]\n  0: a > b\n", 5, 3),
        ("candidates: a b\nr: 1\ndistinguished: a\n[registered]\n1: a > \n", 5, 3),
        ("candidates: a b\nr: 1\nr: 2\n", 3, 1),
        ("candidates: a b\nr: 1\n", 1, 1),
        ("candidates: a b\nr: 1\ndistinguished: a\nproblem: xx\n", 4, 10),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(fileio.ParseError) as info:
        fileio.parse_election(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert str(info.value).startswith(f"line {line}, column {col}:")


def test_semantic_errors_surface_when_building():
    ef = fileio.parse_election("candidates: a b c\nr: 1\ndistinguished: z\nproblem: dv\nbudget: 0\n")
    with pytest.raises(InputError):
        fileio.to_instance(ef)
    ef = fileio.parse_election("candidates: a b c\nr: 1\ndistinguished: a\n[registered]\n1: a > b\n")
    with pytest.raises(InputError):
        fileio.to_instance(ef, problem="dv", budget=0)
    with pytest.raises(InputError):
        fileio.to_instance(fileio.parse_election("candidates: a b\nr: 1\ndistinguished: a\n"))


def test_graph_round_trip_and_errors():
    text = (DATA / "triangle.txt").read_text()
    g = fileio.parse_graph(text)
    assert g == Graph(3, ((0, 1), (0, 2), (1, 2)))
    assert fileio.write_graph(g) == text
    with pytest.raises(InputError):
        fileio.parse_graph("graph 2 2\ne 0 1\n")
    with pytest.raises(fileio.ParseError):
        fileio.parse_graph("graph 2 1\nedge 0 1\n")
    with pytest.raises(InputError):
        fileio.parse_graph("graph 2 1\ne 0 0\n")


def test_packing_and_group_round_trips():
    rng = random.Random(3)
    for _ in range(50):
        inst = random_mrsp(rng, 6, rng.randint(0, 6), 3, rng.randint(0, 3))
        text = fileio.write_mrsp(inst)
        assert fileio.write_mrsp(fileio.parse_mrsp(text)) == text
    vis = as_groups([(1, 3), (2, 5)])
    assert fileio.parse_vis(fileio.write_vis(vis)) == vis
    assert fileio.parse_vis((DATA / "groups.txt").read_text()) == vis
    with pytest.raises(InputError):
        fileio.parse_vis("vis 2\ngroup 1\n")
