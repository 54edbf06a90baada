import json

import pytest

from crystals.cartan import root_system
from crystals.cli import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    element_from_json,
    element_to_json,
    epsilon_vector,
    main,
    parse_entries,
    parse_weight,
    render_entries,
    render_growth_diagram,
    render_weight,
    render_weight_epsilon,
    weight_from_epsilon,
)
from crystals.commutor import growth_rectangle
from crystals.crystal import TensorElement, TensorShape, embed_highest


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_commutor_golden(capsys):
    code, out, _ = run(
        capsys, "commutor", "--type", "A", "--rank", "2",
        "--left", "1,1", "--right", "2,0",
        "--element", "1,0;1,0;-1,1;0,-1;-1,1", "--backend", "both",
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "hk: 1,0;1,0 | -1,1;-1,1;0,-1"
    assert lines[1] == "jdt: 1,0;1,0 | -1,1;-1,1;0,-1"
    assert lines[2] == "MATCH"


def test_commutor_json(capsys):
    code, out, _ = run(
        capsys, "commutor", "--type", "A", "--rank", "2",
        "--left", "1,1", "--right", "2,0",
        "--element", "1,0;1,0;-1,1;0,-1;-1,1", "--format", "json",
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["match"] is True
    sys_, blocks = element_from_json(data["results"]["hk"])
    assert blocks[0] == ((2, 0), ((1, 0), (1, 0)))


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--type", "A", "--rank", "2",
                       "--weight", "1,0")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 3


def test_decompose_zero(capsys):
    code, out, _ = run(capsys, "decompose", "--type", "A", "--rank", "2",
                       "--weight", "0,0")
    assert code == EXIT_OK
    assert out.strip() == ""


def test_decompose_epsilon_input(capsys):
    code, out, _ = run(capsys, "decompose", "--type", "A", "--rank", "2",
                       "--weight", "e1+e1+e2")
    assert code == EXIT_OK
    assert out.strip() == "1,0;1,0;-1,1"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "decompose", "--type", "A", "--rank", "2",
                       "--weight", "1,2,3")
    assert code == EXIT_USAGE and "coordinates" in err
    code, _, _ = run(capsys, "decompose", "--type", "A", "--rank", "2")
    assert code == EXIT_USAGE


def test_rank_guard(capsys, monkeypatch):
    code, _, err = run(capsys, "orbit", "--type", "A", "--rank", "9",
                       "--weight", "1,0,0,0,0,0,0,0,0")
    assert code == EXIT_USAGE and "CRYSTAL_MAX_RANK" in err
    monkeypatch.setenv("CRYSTAL_MAX_RANK", "9")
    code, out, _ = run(capsys, "orbit", "--type", "A", "--rank", "9",
                       "--weight", "1,0,0,0,0,0,0,0,0")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 10


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "comagree", "--types", "A1",
                       "--max-coord", "2")
    assert code == EXIT_OK and "PASS" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "involution", "--types", "A1",
                       "--max-coord", "1", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["ok"] is True and data["suite"] == "involution"


def test_cactus_command(capsys):
    code, out, _ = run(
        capsys, "cactus", "--type", "A", "--rank", "1",
        "--blocks", "1|1|1", "--element", "1;1;-1",
        "-p", "1", "-q", "3", "--backend", "both",
    )
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "MATCH"


def test_growth_command(capsys):
    code, out, _ = run(
        capsys, "growth", "--type", "A", "--rank", "2",
        "--left", "1,1", "--right", "2,0", "--element", "0,-1;-1,1",
    )
    assert code == EXIT_OK
    assert "output: 1,0;1,0 | -1,1;-1,1;0,-1" in out
    assert out.count("+") == 12  # 3 corner rows of 4


# -- serialization round trips -------------------------------------------------


@pytest.mark.parametrize("kind,rank,weights", [
    ("A", 2, [(1, 0), (1, 1), (-1, 2), (0, 0)]),
    ("B", 2, [(0, 1), (1, 0), (2, 1), (1, -1)]),
    ("C", 2, [(1, 0), (0, 1), (-1, 1)]),
    ("D", 4, [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, -1, 0)]),
])
def test_epsilon_round_trip(kind, rank, weights):
    sys_ = root_system(kind, rank)
    for w in weights:
        text = render_weight_epsilon(sys_, w)
        assert weight_from_epsilon(sys_, text) == w


def test_text_round_trip():
    sys_ = root_system("A", 2)
    entries = ((1, 0), (-1, 1), (0, -1))
    assert parse_entries(render_entries(entries), sys_) == entries
    assert parse_weight(render_weight((3, -2)), sys_) == (3, -2)


def test_json_round_trip():
    sys_ = root_system("A", 2)
    blocks = [((1, 1), ((1, 0), (1, 0), (-1, 1)))]
    data = json.loads(json.dumps(element_to_json(sys_, blocks)))
    sys2, blocks2 = element_from_json(data)
    assert sys2 is sys_ and blocks2 == blocks


def test_epsilon_vector_spin():
    b2 = root_system("B", 2)
    from fractions import Fraction

    assert epsilon_vector(b2, (0, 1)) == (Fraction(1, 2), Fraction(1, 2))


# -- growth rendering -----------------------------------------------------------


def test_render_empty_diagram():
    a2 = root_system("A", 2)
    sh0 = TensorShape(a2, ())
    empty = TensorElement(sh0, ())
    _, diag = growth_rectangle(empty, empty)
    assert render_growth_diagram(diag) == "+"


def test_render_one_by_one():
    a1 = root_system("A", 1)
    sh = TensorShape(a1, ((1,),))
    left = TensorElement(sh, ((1,),))
    right = TensorElement(sh, ((1,),))
    _, diag = growth_rectangle(left, right, verify=True)
    text = render_growth_diagram(diag)
    assert text.count("+") == 4
    assert text.count("1") == 4  # four labeled edges
    # deterministic byte output
    assert text == render_growth_diagram(diag)
