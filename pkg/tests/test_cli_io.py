import json

import pytest

from gcoalg import fixtures
from gcoalg.cli import main
from gcoalg.crossed import CocleftData, FactorSet, WeakAction
from gcoalg.group_coalgebra import GroupCoalgebra, is_strong
from gcoalg.io import ParseError, ValidationError, dump, dumps, fixture_json, from_json, load, save
from gcoalg.linalg import Field, Matrix
from gcoalg.smash import to_smash_comodule
from gcoalg.group_coalgebra import suspension


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.mark.parametrize("name", sorted(fixtures.shipped_objects()))
def test_shipped_files_round_trip(name):
    obj = load(name)
    assert obj == fixtures.shipped_objects()[name]
    assert from_json(json.loads(dumps(obj))) == obj


@pytest.mark.parametrize("name", sorted(fixtures.GROUP_COALGEBRAS))
def test_fixture_classification(name):
    c = load(name)
    assert isinstance(c, GroupCoalgebra)
    assert is_strong(c).strong == fixtures.CLASSIFICATION[name][0]


def test_comodule_kinds_round_trip(tmp_path):
    c = fixtures.c2gl_z2()
    m = suspension(c, 1)
    sm = to_smash_comodule(m)
    C, lam, f = fixtures.crossed1_data()
    d = CocleftData(fixtures.kg2(), fixtures.kg2_basepoint(), fixtures.kg2_basepoint())
    for obj in (m, sm, lam, f, d, c.group):
        p = tmp_path / "x.json"
        save(obj, p)
        assert load(p) == obj


def test_malformed_dims():
    obj = fixture_json("KG2")
    obj["dims"] = [1, -1]
    with pytest.raises(ParseError):
        from_json(obj)
    obj["dims"] = [1]
    with pytest.raises(ParseError):
        from_json(obj)


def test_broken_coassociativity_reports_triple():
    obj = fixture_json("KS3")
    obj["comult"]["1,1"]["rows"] = [["2 mod 3"]]
    with pytest.raises(ValidationError) as err:
        from_json(obj)
    triples = [f["triple"] for f in err.value.report.failures if f["check"] == "coassociativity"]
    assert triples
    assert all(len(t) == 3 for t in triples)
    from_json(obj, validate=False)


def test_parse_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load(p)
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")
    with pytest.raises(ParseError):
        from_json({"kind": "nonsense", "field": "F3"})
    with pytest.raises(ParseError):
        from_json({"kind": "coalgebra", "field": "F3", "dim": 1, "comult": {"shape": [1, 1], "rows": [["x"]]},
                   "counit": [1]})


def test_references_resolve(tmp_path):
    save(fixtures.c2gl(), tmp_path / "C.json")
    obj = json.loads(dumps(fixtures.swap_action(fixtures.c2gl(), fixtures.kg2().group)))
    obj["coalgebra"] = "C.json"
    (tmp_path / "L.json").write_text(json.dumps(obj))
    lam = load(tmp_path / "L.json")
    assert isinstance(lam, WeakAction) and lam.coalgebra == fixtures.c2gl()


def test_cli_strong(capsys):
    code, out = run(capsys, "strong", "KG2")
    assert code == 0 and out["strong"]
    code, out = run(capsys, "strong", "TRUNC.json")
    assert code == 1 and out["witnesses"] == [1]
    assert out["characterizations_agree"]


def test_cli_cocleft(capsys):
    code, out = run(capsys, "cocleft", "decide", "CROSSED1.json", "--seed", "7")
    assert code == 0 and out["cocleft"]
    d = from_json(out["witness"])
    assert isinstance(d, CocleftData)
    code, out = run(capsys, "cocleft", "decide", "TRUNC")
    assert code == 1 and not out["cocleft"]


def test_cli_constructions_round_trip(capsys, tmp_path):
    code, out = run(capsys, "smash", "build", "C2GL_Z2")
    assert code == 0 and from_json(out).comult == fixtures.smash_c2gl_z2().comult
    code, out = run(capsys, "crossed", "build", "--coalgebra", "C2GL", "--action", "SWAP_ACTION",
                    "--factorset", "TRIVIAL_FACTOR_SET")
    assert code == 0 and from_json(out).comult == fixtures.crossed1().comult
    code, out = run(capsys, "crossed", "normalize", "--coalgebra", "K", "--action", "K_TRIVIAL_ACTION",
                    "--factorset", "NEG_FACTOR_SET")
    assert code == 0
    assert from_json(out["factor_set"]) == fixtures.neg_data()[2]
    code, out = run(capsys, "suspend", "KG2", "--at", "1")
    assert code == 0 and from_json(out) == suspension(fixtures.kg2(), 1)
    p = tmp_path / "s.json"
    p.write_text(json.dumps(out))
    code, sm = run(capsys, "smash", "to", str(p))
    assert code == 0
    q = tmp_path / "sm.json"
    q.write_text(json.dumps(sm))
    code, back = run(capsys, "smash", "from", str(q))
    assert code == 0 and from_json(back) == suspension(fixtures.kg2(), 1)


def test_cli_cohomology(capsys):
    code, out = run(capsys, "cohomology", "z2-check", "--factorset", "NEG_FACTOR_SET")
    assert code == 0
    code, out = run(capsys, "cohomology", "classify")
    assert code == 0
    assert (out["z1"], out["b1"], out["h1"], out["h2"]) == (2, 1, 2, 2)
    code, out = run(capsys, "cohomology", "omega", "KG2", "--basepoint", "KG2_BASEPOINT")
    assert code == 0 and out["omega"] == 2


def test_cli_usage_errors(capsys):
    assert main(["strong", "no_such_thing.json"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_cli_verify(capsys, tmp_path):
    code, out = run(capsys, "verify", "NEG")
    assert code == 0
    obj = fixture_json("KS3")
    obj["comult"]["1,1"]["rows"] = [["2 mod 3"]]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(obj))
    code, out = run(capsys, "verify", str(p))
    assert code == 1
