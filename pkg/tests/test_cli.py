import json

import pytest

from quasichain.cli import main
from quasichain.encoding import Decomposition, Encoding
from quasichain.generators import random_quasi_chain
from quasichain.graph import BipartiteGraph, VertexRef
from quasichain.implicit import VertexLabel, unpack_label
from quasichain.optimize import BicliqueSolution
from quasichain.oracles import is_independent_dominating
from quasichain.permutations import qp_graph
from quasichain.recognition import Unbalanced2P3, verify_witness
from support import AABABBAB, UNBALANCED_2P3, Z6


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_zn_matches_reference(capsys):
    code, out = run(capsys, "gen", "zn", "--n", "6")
    assert code == 0
    assert out == Z6.to_json() + "\n"


def test_gen_other_families(capsys):
    for fam in ("qn", "dn"):
        code, out = run(capsys, "gen", fam, "--n", "3")
        assert code == 0
        BipartiteGraph.from_json(out)
    code, out = run(capsys, "gen", "random", "--n", "20", "--seed", "9", "--density", "0.3")
    assert code == 0
    assert BipartiteGraph.from_json(out) == random_quasi_chain(20, 9, 0.3)


def test_gen_random_needs_seed(capsys):
    assert run(capsys, "gen", "random", "--n", "5")[0] == 2
    assert run(capsys, "gen", "zn", "--n", "0")[0] == 2


def test_recognize(capsys, write):
    code, out = run(capsys, "recognize", write("w.json", UNBALANCED_2P3.to_json()))
    assert code == 1
    data = json.loads(out)
    assert data["quasiChain"] is False
    assert verify_witness(UNBALANCED_2P3, Unbalanced2P3.from_dict(data["witness"]))
    code, out = run(capsys, "recognize", write("z.json", Z6.to_json()))
    assert code == 0 and json.loads(out)["certificate"]["kind"] == "good"


def test_encode_decode_round_trip(capsys, write):
    g = random_quasi_chain(30, 4, 0.4)
    src = write("g.json", g.to_json())
    code, enc = run(capsys, "encode", src)
    assert code == 0
    assert Encoding.from_dict(json.loads(enc)).graph() == g
    code, dec = run(capsys, "decode", write("w.json", enc))
    assert code == 0
    assert dec == g.to_json() + "\n"


def test_decode_plain_word(capsys, write):
    code, out = run(capsys, "decode", write("w.json", '{"word": "aababbab", "top": [], "bottom": []}'))
    assert code == 0 and BipartiteGraph.from_json(out) == AABABBAB


def test_decompose(capsys, write):
    g = random_quasi_chain(25, 3, 0.5)
    code, out = run(capsys, "decompose", write("g.json", g.to_json()))
    assert code == 0
    assert Decomposition.from_dict(json.loads(out)).graph() == g


def test_labels_and_adjacent(capsys, write):
    src = write("g.json", AABABBAB.to_json())
    code, out = run(capsys, "labels", src)
    assert code == 0
    data = json.loads(out)
    labels = [VertexLabel.parse(x["label"]) for x in data["labels"]]
    packed = [x["packed"] for x in data["labels"]]
    assert [unpack_label(p).z_key for p in packed] == [lab.z_key for lab in labels]
    a_labels, b_labels = labels[:4], labels[4:]
    for i, la in enumerate(a_labels):
        for j, lb in enumerate(b_labels):
            for x, y in ((la.dump(), lb.dump()), (packed[i], packed[4 + j])):
                code, out = run(capsys, "adjacent", x, y)
                assert code == 0
                assert json.loads(out) == {"adjacent": AABABBAB.has_edge(i, j)}
    code, out = run(capsys, "labels", "--dump", src)
    assert [VertexLabel.parse(x) for x in out.splitlines()] == labels


def test_adjacent_rejects_garbage(capsys):
    assert run(capsys, "adjacent", "nonsense", "a:0:1:-:-")[0] == 2
    assert run(capsys, "adjacent", "0", "1000")[0] == 2


def test_contiguity(capsys, write):
    code, out = run(capsys, "contiguity", write("g.json", Z6.to_json()))
    data = json.loads(out)
    assert code == 0 and data["contiguity"] == 1
    assert len(data["order"]) == 12


def test_biclique_and_ids(capsys, write):
    g = BipartiteGraph.complete(3, 4)
    src = write("g.json", g.to_json())
    code, out = run(capsys, "biclique", src)
    data = json.loads(out)
    assert code == 0 and data["edgeCount"] == 12
    sol = BicliqueSolution(frozenset(i for _, i in data["sideA"]), frozenset(j for _, j in data["sideB"]))
    assert sol.is_biclique_of(g)
    code, out = run(capsys, "biclique", "--objective", "balanced", src)
    assert json.loads(out)["p"] == 3
    code, out = run(capsys, "ids", src)
    data = json.loads(out)
    assert code == 0 and data["size"] == 3  # the whole smaller part
    assert is_independent_dominating(g, [VertexRef(s, i) for s, i in data["vertices"]])


def test_optimizers_reject_non_quasi_chain(capsys, write):
    src = write("g.json", UNBALANCED_2P3.to_json())
    for argv in (("biclique", src), ("ids", src), ("encode", src), ("labels", src)):
        code, out = run(capsys, *argv)
        assert code == 1 and "witness" in json.loads(out)


def test_perm(capsys, write):
    code, out = run(capsys, "perm", "encode", "2,1")
    assert code == 0 and BipartiteGraph.from_json(out) == qp_graph((2, 1))
    code, out = run(capsys, "perm", "encode-star", "2,1")
    assert BipartiteGraph.from_json(out) == qp_graph((1, 3, 2))
    src = write("p.json", qp_graph((3, 1, 2)).to_json())
    code, out = run(capsys, "perm", "recover", src)
    assert code == 0 and json.loads(out) == {"permutation": "3,1,2"}
    code, out = run(capsys, "perm", "contains", "2,1,3", "1,2")
    assert json.loads(out) == {"contains": True}
    assert run(capsys, "perm", "encode", "1,1")[0] == 2
    assert run(capsys, "perm", "recover", write("z.json", Z6.to_json()))[0] == 2


def test_gadget(capsys, write):
    k11 = write("k.json", BipartiteGraph.complete(1, 1).to_json())
    code, out = run(capsys, "gadget", k11, k11)
    data = json.loads(out)
    assert code == 0 and data["p"] == 2
    assert BipartiteGraph.from_dict(data["g"]).num_vertices == 5
    bad = write("e.json", BipartiteGraph.empty(1, 1).to_json())
    assert run(capsys, "gadget", bad, k11)[0] == 2


def test_oracle(capsys, write):
    src = write("g.json", BipartiteGraph.complete(1, 1).to_json())
    code, out = run(capsys, "oracle", "independent-sets", src)
    assert code == 0 and json.loads(out)["count"] == 3
    code, out = run(capsys, "oracle", "quasi-chain", write("w.json", UNBALANCED_2P3.to_json()))
    assert json.loads(out)["quasiChain"] is False
    code, out = run(capsys, "oracle", "biclique", "--objective", "balanced", src)
    assert json.loads(out)["p"] == 1
    code, out = run(capsys, "oracle", "ids", src)
    assert json.loads(out)["size"] == 1
    big = write("big.json", BipartiteGraph.empty(13, 1).to_json())
    assert run(capsys, "oracle", "biclique", big)[0] == 2


def test_bad_input(capsys, write):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "recognize", write("x.json", "{not json"))[0] == 2
    assert run(capsys, "recognize", write("y.json", "[1, 2]"))[0] == 2
    assert run(capsys, "recognize", write("e.json", '{"a": 1, "b": 1, "edges": [[0, 3]]}'))[0] == 2
    assert run(capsys, "recognize", "/nonexistent/graph.json")[0] == 2
    assert run(capsys, "decode", write("w.json", '{"word": "abc"}'))[0] == 2


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(Z6.to_json()))
    code, out = run(capsys, "recognize", "-")
    assert code == 0 and json.loads(out)["quasiChain"] is True


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
