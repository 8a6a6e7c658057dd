import json

import pytest

from icosa5.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "0 fail" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"checks", "summary"}
    assert data["summary"]["fail"] == 0
    assert data["summary"]["total"] == len(data["checks"])


def test_verify_json_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--json")
    _, second, _ = run(capsys, "verify", "--json")
    assert first == second


def test_verify_single_table(capsys):
    code, out, _ = run(capsys, "verify", "--table", "5", "--json")
    assert code == 0
    assert all(c["name"].startswith("table5/") for c in json.loads(out)["checks"])


def test_verify_bad_table(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--table", "9"])
    assert info.value.code == 2


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--table", "7", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["rows"][0] == {"cycle": "(1,2,3,4,5)", "index": 6, "exponent": 3}


def test_tables_text_all(capsys):
    code, out, _ = run(capsys, "tables", "--text")
    assert code == 0
    for n in range(1, 8):
        assert f"Table {n}:" in out


def test_map_a5_to_rotation(capsys, model):
    code, out, _ = run(capsys, "map", "(1,4,5)", "--from", "a5")
    assert code == 0
    assert out.strip() == str(model.named["D"])


def test_map_rotation_to_a5(capsys, model):
    code, out, _ = run(capsys, "map", str(model.named["X"]), "--from", "ico")
    assert code == 0
    assert out.strip() == "(1,2,3)"


def test_map_requires_from(capsys):
    with pytest.raises(SystemExit) as info:
        main(["map", "(1,4,5)"])
    assert info.value.code == 2


def test_word_for_a(capsys, model):
    code, out, _ = run(capsys, "word", str(model.named["A"]))
    assert code == 0
    assert out.strip() == "YYT"


def test_word_identity(capsys):
    code, out, _ = run(capsys, "word", "")
    assert (code, out.strip()) == (0, "-")


def test_word_bare_digits_in_ico_domain(capsys):
    code, _, err = run(capsys, "word", "(1,2,3)", "--domain", "ico")
    assert code == 2
    assert "not in the ico group" in err


def test_classify_a5_input(capsys):
    code, out, _ = run(capsys, "classify", "(1,3,2,4,5)", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["class"] == "vertex"
    assert data["axis"] == [["1'"], ["1+"]]
    assert data["order"] == 5


def test_classify_odd_permutation(capsys):
    code, _, err = run(capsys, "classify", "(1,2)")
    assert code == 2
    assert "not in A5" in err


def test_classify_unknown_label_has_position(capsys):
    code, _, err = run(capsys, "classify", "(1,2'',7+)")
    assert code == 2
    assert "'7+'" in err
    assert "column 8" in err


def test_classify_ico_labels_with_a5_domain(capsys):
    code, _, err = run(capsys, "classify", "(1,2+,3)", "--domain", "a5")
    assert code == 2


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "--json")
    data = json.loads(out)
    assert code == 0
    assert (len(data["vertices"]), len(data["edges"]), len(data["faces"])) == (12, 30, 20)
    assert ["1'", "1+"] in data["antipodal_pairs"]


def test_correspondence_json(capsys):
    code, out, _ = run(capsys, "correspondence", "--json")
    rows = json.loads(out)
    assert code == 0
    assert len(rows) == 60
    assert rows[0]["class"] == "identity"


def test_correspondence_text(capsys):
    code, out, _ = run(capsys, "correspondence")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].split() == ["word", "rotation_cycles", "class", "axis", "a5_cycles", "a5_class"]
    assert len(lines) == 61
