import json

from qsmzv.cli import main


def test_eval(capsys):
    assert main(["eval", "--q", "1/2", "--M", "6", "--expr", "ZqM(qshuf(g[1],g[1]))"]) == 0
    assert capsys.readouterr().out.strip() == "361/630"


def test_eval_parse_error(capsys):
    assert main(["eval", "--expr", "qharm(g[1],"]) == 2
    assert "offset 12" in capsys.readouterr().err


def test_identity_json(capsys):
    assert main(["identity", "--id", "B10", "--order", "4", "--k", "1,2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["summary"]["fail"] == 0


def test_identity_with_words(capsys):
    assert main(["identity", "--id", "B1", "--order", "4", "--w", "g[1]", "--w2", "H"]) == 0
    capsys.readouterr()


def test_verify_csv(capsys):
    code = main(["verify", "--suite", "bounds", "--M", "4", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[0] == "suite,id,status,lhs,rhs,detail"


def test_limit(capsys):
    assert main(["limit", "--expr", "g[2]", "--grid", "0.5,0.9"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert rows[0]["value"] < rows[1]["value"]
