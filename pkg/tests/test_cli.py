"""End-to-end tests for the command line interface."""

import json

from aspalgebra.cli import main

CHOICE = "#alphabet a, b.\na :- not b.\nb :- not a.\n"
FACT_A = "#alphabet a, b.\na.\n"
GUARDED_A = "#alphabet a, b.\na :- not b.\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_compose(tmp_path, capsys):
    left = write(tmp_path, "left.lp", "#alphabet a, b, c.\na :- b.\n")
    right = write(tmp_path, "right.lp", "#alphabet a, b, c.\nb :- c.\n")
    code, out, err = run(capsys, "compose", left, right)
    assert code == 0
    assert out == "#alphabet a, b, c.\na :- c.\n"
    assert err == ""


def test_cup_and_alphabet_union_notice(tmp_path, capsys):
    left = write(tmp_path, "left.lp", "#alphabet a, b, c.\na :- b.\n")
    right = write(tmp_path, "right.lp", "#alphabet a, c.\na :- c.\n")
    code, out, err = run(capsys, "cup", left, right)
    assert code == 0
    assert out == "#alphabet a, b, c.\na :- b, c.\n"
    assert "note: input alphabets differ; using their union {a, b, c}" in err


def test_not_of_empty_program_is_all_facts(tmp_path, capsys):
    empty = write(tmp_path, "empty.lp", "#alphabet a, b.\n")
    code, out, _ = run(capsys, "not", empty)
    assert code == 0
    assert out == "#alphabet a, b.\na.\nb.\n"


def test_tf_exposes_truth_atoms(tmp_path, capsys):
    program = write(tmp_path, "p.lp", "#alphabet a, b, c.\na :- b.\n")
    code, out, _ = run(capsys, "tf", program)
    assert code == 0
    assert out == "#alphabet a, b, c.\na :- b.\nb :- f.\nc :- f.\n"


def test_reduct_and_tp(tmp_path, capsys):
    program = write(tmp_path, "p.lp", "#alphabet a, b.\na.\nb :- a, not b.\n")
    code, out, _ = run(capsys, "reduct", "--kind", "gl", "-i", "a", program)
    assert code == 0
    assert out == "#alphabet a, b.\na.\nb :- a.\n"
    code, out, _ = run(capsys, "tp", "-i", "a", program)
    assert code == 0
    assert out == "a, b\n"


def test_lm_rejects_non_horn(tmp_path, capsys):
    choice = write(tmp_path, "choice.lp", CHOICE)
    code, _, err = run(capsys, "lm", choice)
    assert code == 2
    assert err.startswith("error:")
    assert "Horn" in err


def test_answer_sets_one_per_line(tmp_path, capsys):
    choice = write(tmp_path, "choice.lp", CHOICE)
    code, out, _ = run(capsys, "answer-sets", choice)
    assert code == 0
    assert out == "a\nb\n"


def test_equiv_positive(tmp_path, capsys):
    left = write(tmp_path, "left.lp", FACT_A)
    right = write(tmp_path, "right.lp", "#alphabet a, b.\na.\na :- b.\n")
    for mode in ("as", "uniform", "strong"):
        code, out, _ = run(capsys, "equiv", "--mode", mode, left, right)
        assert code == 0, mode
        assert out == "equivalent\n"


def test_equiv_strong_negative_shows_context(tmp_path, capsys):
    left = write(tmp_path, "left.lp", FACT_A)
    right = write(tmp_path, "right.lp", GUARDED_A)
    code, out, _ = run(capsys, "equiv", "--mode", "strong", left, right)
    assert code == 1
    assert out == (
        "not equivalent\n"
        "distinguishing context:\n"
        "#alphabet a, b.\n"
        "b.\n"
        "left answer sets: {a, b}\n"
        "right answer sets: {b}\n"
    )


def test_equiv_json_payload(tmp_path, capsys):
    left = write(tmp_path, "left.lp", FACT_A)
    right = write(tmp_path, "right.lp", GUARDED_A)
    code, out, _ = run(capsys, "equiv", "--mode", "strong", "--json", left, right)
    assert code == 1
    payload = json.loads(out)
    assert payload == {
        "mode": "strong",
        "equivalent": False,
        "context": "#alphabet a, b.\nb.\n",
        "left_answer_sets": [["a", "b"]],
        "right_answer_sets": [["b"]],
    }
    code, out, _ = run(capsys, "equiv", "--mode", "as", "--json", left, right)
    assert code == 0
    assert json.loads(out)["equivalent"] is True


def test_equiv_subsumption(tmp_path, capsys):
    left = write(tmp_path, "left.lp", "#alphabet a.\na.\n")
    right = write(tmp_path, "right.lp", "#alphabet a.\na :- a.\n")
    code, out, _ = run(capsys, "equiv", "--mode", "subsumption", left, right)
    assert code == 1
    assert out.startswith("not equivalent\ndistinguishing context:\n")


def test_laws_text_and_json(capsys):
    code, out, _ = run(capsys, "laws", "--trials", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "64 laws checked, all verdicts as expected"
    assert "compose-right-unit: holds-on-sample after 2 trials (expected law) ok" in lines
    code, out, _ = run(capsys, "laws", "--trials", "2", "--json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 64
    assert all(record["as_expected"] for record in records)
    sample = next(r for r in records if r["law_id"] == "cup-idempotent")
    assert sample["verdict"] == "refuted"
    assert sample["expected"] == "non-law"


def test_rename(tmp_path, capsys):
    program = write(tmp_path, "p.lp", "#alphabet a, b, c.\na :- b.\n")
    code, out, _ = run(capsys, "rename", "--perm", "(a b)", program)
    assert code == 0
    assert out == "#alphabet a, b, c.\nb :- a.\n"


def test_ominus_and_oplus(capsys):
    code, out, _ = run(capsys, "ominus", "-i", "a", "--alphabet", "a, b")
    assert code == 0
    assert out == "#alphabet a, b.\na.\nb :- b.\n"
    code, out, _ = run(capsys, "oplus", "-l", "not b", "--alphabet", "a, b")
    assert code == 0
    assert out == "#alphabet a, b.\na :- a, not b.\nb :- b, not b.\n"


def test_star_and_omega(tmp_path, capsys):
    chain = write(tmp_path, "chain.lp", "#alphabet a, b.\na.\nb :- a.\n")
    code, out, _ = run(capsys, "omega", chain)
    assert code == 0
    assert out == "a, b\n"
    code, out, _ = run(capsys, "star", chain)
    assert code == 0
    assert out.startswith("#alphabet a, b.\na.\n")


def test_parse_error_exit_code(tmp_path, capsys):
    bad = write(tmp_path, "bad.lp", "#alphabet a.\na :- , b.\n")
    code, _, err = run(capsys, "dual", bad)
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "compose", "missing.lp", "also-missing.lp")
    assert code == 2
    assert err.startswith("error:")


def test_enumeration_cap_exit_code(tmp_path, capsys):
    choice = write(tmp_path, "choice.lp", CHOICE)
    code, _, err = run(capsys, "answer-sets", "--max-atoms", "1", choice)
    assert code == 3
    assert "enumeration is capped at 1" in err


def test_no_subcommand_prints_help(capsys):
    code, _, err = run(capsys)
    assert code == 2
    assert "COMMAND" in err


def test_output_is_deterministic(tmp_path, capsys):
    choice = write(tmp_path, "choice.lp", CHOICE)
    first = run(capsys, "answer-sets", choice)
    second = run(capsys, "answer-sets", choice)
    assert first == second
