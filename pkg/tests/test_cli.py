import json
import random
import subprocess
import sys

import pytest

from z2quiver.cli import main
from z2quiver.combinat import DimVector, parse_dim_vector
from z2quiver.freeprod import is_simple_alpha


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestComponents:
    def test_count(self, capsys):
        code, out = run(capsys, "components", "--n", "3", "--m", "2")
        assert code == 0 and out == "27\n"

    def test_orbits(self, capsys):
        code, out = run(capsys, "components", "--n", "3", "--m", "2", "--orbits")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "27" and lines[1] == "4"
        assert len(lines) == 6
        assert lines[2:] == sorted(lines[2:])

    def test_trivial(self, capsys):
        code, out = run(capsys, "components", "--n", "1", "--m", "0")
        assert code == 0 and out == "1\n"

    def test_csv(self, capsys):
        code, out = run(capsys, "components", "--n", "3", "--m", "2", "--format", "csv")
        assert code == 0 and out == "n,m,components\n3,2,27\n"

    def test_csv_orbits(self, capsys):
        code, out = run(capsys, "components", "--n", "3", "--m", "2", "--orbits", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "alpha" and len(lines) == 5


class TestOneQuiver:
    def test_matrix_is_m3(self, capsys):
        code, out = run(capsys, "one-quiver", "--n", "3")
        rows = [[int(x) for x in line.split()] for line in out.splitlines()]
        assert code == 0
        assert rows[0] == [1, 0, 0, -1, 0, -1, -1, -2]
        assert rows[7] == [-2, -1, -1, 0, -1, 0, 0, 1]

    def test_json(self, capsys):
        code, out = run(capsys, "one-quiver", "--n", "2", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["v"] == 4
        assert obj["arrows"][0][3] == 1 and obj["arrows"][0][1] == 0

    def test_dot(self, capsys):
        code, out = run(capsys, "one-quiver", "--n", "2", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph one_quiver {")
        assert '  v0 [label="{}"];' in out
        assert '  v0 -> v3 [label="1"];' in out


class TestGraph:
    def test_json_33(self, capsys):
        code, out = run(capsys, "graph", "--n", "3", "--m", "3", "--format", "json")
        obj = json.loads(out)
        assert code == 0
        assert len(obj["nodes"]) == 6 and len(obj["edges"]) == 6

    def test_json_44(self, capsys):
        code, out = run(capsys, "graph", "--n", "4", "--m", "4", "--format", "json")
        obj = json.loads(out)
        assert len(obj["nodes"]) == 13 and len(obj["edges"]) == 19

    def test_deterministic_bytes(self, capsys):
        outputs = []
        for _ in range(2):
            code, out = run(capsys, "graph", "--n", "3", "--m", "3")
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1]

    def test_dot_colours(self, capsys):
        code, out = run(capsys, "graph", "--n", "3", "--m", "3", "--format", "dot")
        assert code == 0
        assert 'n0 [label="(3),(3)", fillcolor="palegreen"]' in out
        assert "lightpink" in out

    def test_m_above_n_is_domain_failure(self, capsys):
        code = main(["graph", "--n", "3", "--m", "4"])
        captured = capsys.readouterr()
        assert code == 1
        assert "simple" in captured.err


class TestLocal:
    def test_young_filter(self, capsys):
        code, out = run(capsys, "local", "--n", "9", "--m", "9", "--young", "3,3,3")
        assert code == 0
        assert out.strip().endswith("settings: 10")

    def test_json(self, capsys):
        code, out = run(capsys, "local", "--n", "3", "--m", "3", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and len(obj) == 6
        assert [node["id"] for node in obj][0] == "(3),(3)"

    def test_bad_young(self, capsys):
        code = main(["local", "--n", "4", "--m", "4", "--young", "3,3"])
        assert code == 1


def fifty_alpha_specs() -> list[DimVector]:
    specs: list[DimVector] = []
    for n in range(2, 6):
        for m in range(1, 6):
            specs.append(DimVector.standard(n, m))
    for a in range(8):
        specs.append(DimVector.character(3, a))
    for n, k in ((3, 2), (3, 3), (4, 2), (4, 3)):
        specs.append(DimVector(((2 * k, 0),) * (n - 2) + ((k, k), (k, k))))
    rng = random.Random(99)
    while len(specs) < 50:
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        specs.append(DimVector(tuple((p, m - p) for p in (rng.randint(0, m) for _ in range(n)))))
    return specs


class TestSimple:
    def test_simple_yes(self, capsys):
        code, out = run(capsys, "simple", "--alpha", "2,1;2,1;2,1")
        assert code == 0
        assert "sum_i max(a_i+, a_i-) = 6 <= 6 = m*(n-1)" in out
        assert out.strip().endswith("simple: yes")

    def test_exception_reason(self, capsys):
        code, out = run(capsys, "simple", "--alpha", "(4,0)*2;2,2;2,2")
        assert code == 1
        assert "exception orbit" in out
        assert out.strip().endswith("simple: no")

    def test_inequality_reason(self, capsys):
        code, out = run(capsys, "simple", "--alpha", "3,1;3,1;3,1")
        assert code == 1
        assert "= 9 > 8 = m*(n-1)" in out

    def test_fifty_spec_matrix(self, capsys):
        specs = fifty_alpha_specs()
        assert len(specs) == 50
        for alpha in specs:
            code, _ = run(capsys, "simple", "--alpha", str(alpha))
            assert code == (0 if is_simple_alpha(alpha) else 1), str(alpha)

    def test_bad_alpha_is_usage_like_failure(self, capsys):
        code = main(["simple", "--alpha", "2,1;nope"])
        assert code == 1
        assert "pair 2" in capsys.readouterr().err


class TestIssDim:
    def test_value(self, capsys):
        code, out = run(capsys, "iss-dim", "--alpha", "2,1;2,1;2,1")
        assert code == 0 and out == "4\n"

    def test_non_simple(self, capsys):
        code = main(["iss-dim", "--alpha", "3,1;3,1;3,1"])
        assert code == 1
        assert "not a simple" in capsys.readouterr().err


class TestSmoothComponent:
    def test_yes(self, capsys):
        code, out = run(capsys, "smooth-component", "--alpha", "2,1;1,2;3,0")
        assert code == 0 and out.strip().endswith("smooth: yes")

    def test_no(self, capsys):
        code, out = run(capsys, "smooth-component", "--alpha", "2,1;2,1;2,1")
        assert code == 1 and out.strip().endswith("smooth: no")


class TestRep2:
    def test_csv_header_and_rows(self, capsys):
        code, out = run(capsys, "rep2", "--n", "3", "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "A,B,k,rep_dim,quot_dim,singularities"
        assert len(lines) == 1 + 27
        assert lines[1] == "{},{},0,0,0,0"
        assert '"{1,2,3}",{},3,6,3,4' in lines

    def test_text_total(self, capsys):
        code, out = run(capsys, "rep2", "--n", "2")
        assert code == 0
        assert out.strip().endswith("total components: 9")


class TestTreelike:
    def test_n3(self, capsys):
        code, out = run(capsys, "treelike", "--n", "3")
        assert code == 0
        assert "type II(2): 4 instances" in out
        assert out.strip().endswith("distinct types: 5")

    def test_out_of_range(self, capsys):
        code = main(["treelike", "--n", "7"])
        assert code == 1


class TestCanon:
    def test_relation(self, capsys):
        code, out = run(capsys, "canon", "--chars", "{1}+{2}", "--n", "3")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "{}+{1,2}"
        assert lines[1] == "alpha: 1,1;1,1;2,0"

    def test_chain_unchanged(self, capsys):
        code, out = run(capsys, "canon", "--chars", "{}^2+{1,2,3}")
        assert code == 0 and out.splitlines()[0] == "{}^2+{1,2,3}"


class TestUsageErrors:
    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as err:
            main(["components", "--n", "3"])
        assert err.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as err:
            main(["spectral-sequence"])
        assert err.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "z2quiver", "components", "--n", "3", "--m", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "27\n"


def test_round_trip_spec_through_cli(capsys):
    # the printed alpha of canon feeds back into simple
    code, out = run(capsys, "canon", "--chars", "{1}+{2}", "--n", "3")
    alpha = out.splitlines()[1].removeprefix("alpha: ")
    assert parse_dim_vector(alpha).m == 2
    code, _ = run(capsys, "simple", "--alpha", alpha)
    assert code == 0
