import io

import pytest

from szl.boundary import BoundarySpec
from szl.cli import run
from szl.docio import GraphDocument, GraphFileError, format_document, parse_graph_file
from szl.graph import Multigraph, W1, aK2, cut_degree
from szl.orient import Orientation, verify_beta_orientation
from szl.verify import parse_cache

W1_DOC = """\
# W1
vertices 4
edge 0 1 3
edge 0 2 3
edge 0 3 3
edge 1 2 1
edge 1 3 1
edge 2 3 1
ell 5
"""


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def w1_file(tmp_path):
    p = tmp_path / "w1.graph"
    p.write_text(W1_DOC)
    return str(p)


def test_parse_w1():
    doc = parse_graph_file(W1_DOC)
    assert doc.graph == W1() and doc.ell == 5 and doc.boundary is None
    assert parse_graph_file("vertices 1\n") == GraphDocument(Multigraph(1, ()))


@pytest.mark.parametrize(
    "text, line",
    [
        ("vertices 2\nedge 0 0 2\n", 2),
        ("vertices 2\nedge 0 1 1\nedge 1 0 1\n", 3),
        ("vertices 2\n\nedge 0 2 1\n", 3),
        ("edge 0 1 1\nvertices 2\n", 1),
        ("vertices 2\nboundary 1 1 0\n", 2),
        ("vertices 2\nedge 0 1 x\n", 2),
        ("vertices 2\ncolour red\n", 2),
        ("vertices 2\nedge 0 1 ２\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFileError) as err:
        parse_graph_file(text)
    assert err.value.lineno == line


def test_document_round_trip():
    doc = GraphDocument(W1(), 5, (5, 5, 5, 5))
    assert parse_graph_file(format_document(doc)) == doc


def test_decide_w1(w1_file):
    code, out = invoke("decide", w1_file)
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "verdict nonmember"
    assert [l for l in lines if l.startswith("failing-boundary")] == ["failing-boundary 5 5 5 5"]
    # every printed bad set must re-verify against its gamma
    gamma = None
    for line in lines:
        if line.startswith("gamma "):
            gamma = [int(x) for x in line.split()[1:]]
        elif line.startswith("bad-set "):
            S = [int(x) for x in line.split()[1:]]
            assert abs(sum(gamma[v] for v in S)) > cut_degree(W1(), S)


def test_decide_member_and_fast(tmp_path):
    p = tmp_path / "k.graph"
    p.write_text("vertices 2\nedge 0 1 4\n")
    assert invoke("decide", "--ell", "5", str(p))[0] == 0
    code, out = invoke("decide", "--fast", "--ell", "6", str(p))
    assert code == 1 and "method fast" in out


def test_trees(w1_file):
    code, out = invoke("trees", w1_file)
    assert code == 0
    assert out.splitlines()[0] == "tree-packing 4"
    assert out.splitlines()[1].startswith("witness-partition ")


def test_orient(tmp_path):
    p = tmp_path / "a.graph"
    p.write_text("vertices 2\nedge 0 1 4\nell 5\nboundary 4 6\n")
    assert invoke("orient", str(p)) == (0, "orientation 0 1 4\n")
    assert invoke("orient", "--brute", str(p)) == (0, "orientation 0 1 4\n")


def test_orient_output_reverifies(tmp_path):
    p = tmp_path / "w.graph"
    p.write_text(W1_DOC + "boundary 3 1 7 9\n")
    code, out = invoke("orient", str(p))
    assert code == 0
    fwd = {tuple(map(int, l.split()[1:3])): int(l.split()[3]) for l in out.splitlines()}
    D = Orientation(4, tuple(fwd[p] for p in W1().pairs()))
    assert verify_beta_orientation(W1(), BoundarySpec(5, (3, 1, 7, 9)), D)


def test_orient_infeasible_and_errors(tmp_path, w1_file):
    p = tmp_path / "w.graph"
    p.write_text(W1_DOC + "boundary 5 5 5 5\n")
    code, out = invoke("orient", str(p))
    assert code == 1 and out.startswith("infeasible\n")
    assert invoke("orient", w1_file)[0] == 2
    p.write_text(W1_DOC + "boundary 5 5 5 6\n")
    assert invoke("orient", str(p))[0] == 2


def test_simplify_round_trip(w1_file):
    code, out = invoke("simplify", "--ell", "3", w1_file)
    assert code == 0
    doc = parse_graph_file(out)
    assert doc.ell == 3 and max(doc.graph.upper) == 2
    assert format_document(doc) == out


def test_enumerate_and_verify(tmp_path):
    code, out = invoke("enumerate", "--family", "n=3,e=4,mu<=4", "--up-to-iso")
    assert code == 0 and out.splitlines()[-1] == "count 4"
    cache = tmp_path / "c.txt"
    report = tmp_path / "r.txt"
    code, out = invoke(
        "verify", "--ell", "5", "--family", "n=4,e=12,mu<=3,delta>=4", "--up-to-iso",
        "--cache", str(cache), "--report", str(report),
    )
    assert code == 0
    assert report.read_text() == out
    assert sum(not c.member for c in parse_cache(cache.read_text())) == 2
    code, out = invoke("enumerate", "--ell", "3", "--family", "n=2,e<=3", "--cache", str(cache))
    assert code == 0
    assert out.splitlines() == [
        "graph 0 nonmember", "graph 1 nonmember", "graph 2 member", "graph 3 member", "count 4"
    ]
    assert [c.member for c in parse_cache(cache.read_text())] == [False, False, True, True]


def test_input_errors(tmp_path):
    assert invoke("decide", str(tmp_path / "missing.graph"))[0] == 2
    p = tmp_path / "noell.graph"
    p.write_text("vertices 2\nedge 0 1 2\n")
    assert invoke("decide", str(p))[0] == 2
    assert invoke("verify", "--family", "n=4,e=12")[0] == 2
    assert invoke("bogus")[0] == 2
    assert invoke("decide", "--nope", str(p))[0] == 2
