import json

from graphbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


# -- worked examples -----------------------------------------------------------

def test_classify_k5_two_particles(capsys):
    code, data = run_json(capsys, "classify", "--graph", "K5", "--n", "2")
    assert code == 0
    assert data["schema"] == "graphbraid-report/1"
    v = data["verdicts"]
    assert v["hyperbolic"]["answer"] == "yes"
    assert v["relhyp_abelian"]["answer"] == "yes"
    assert v["trivial"]["answer"] == "no"


def test_table_complete_hyperbolicity_grid(capsys):
    code, data = run_json(capsys, "table", "--family", "complete",
                          "--property", "hyperbolic",
                          "--n", "1..5", "--m", "3..8")
    assert code == 0
    for i, n in enumerate(data["rows_n"]):
        for j, col in enumerate(data["columns"]):
            m = int(col.split("=")[1])
            expected = "yes" if (n == 1 or (n == 2 and m <= 5) or m <= 3) \
                else "no"
            assert data["grid"][i][j] == expected, (n, m)


def test_word_check_star_exchange(capsys):
    code, data = run_json(capsys, "word", "--graph", "star3", "--n", "2",
                          "--base", "x,y", "--check", "c a' b c' a b'")
    assert code == 0
    rep = data["check"]
    assert rep["legal"] is True
    assert rep["spherical"] is True
    assert rep["trivial"] is False
    assert rep["normal_form"] == "c a' b c' a b'"
    assert rep["support_edges"] == ["a", "b", "c"]
    assert rep["cyclic_centralizer_witness"] is True


# -- other commands end to end ---------------------------------------------------

def test_complex_summary_k5(capsys):
    code, data = run_json(capsys, "complex", "--graph", "K5", "--n", "2")
    assert code == 0
    assert data["complex"]["cells"] == {"0": 10, "1": 30, "2": 15}
    assert data["complex"]["euler_characteristic"] == -5
    assert data["nonpositively_curved"] is True
    assert data["surface"]["closed_surface"] is True
    assert data["surface"]["orientable"] is False
    assert len(data["complex"]["hyperplanes"]) == 10


def test_complex_text_format_mentions_genus_note(capsys):
    code, out, _ = run(capsys, "complex", "--graph", "K5", "--n", "2",
                       "--format", "text")
    assert code == 0
    assert "genus" in out.lower()


def test_coloring_table(capsys):
    code, data = run_json(capsys, "coloring", "--graph", "star3", "--n", "2")
    assert code == 0
    assert data["axioms_ok"] is True


def test_word_compare(capsys):
    code, data = run_json(capsys, "word", "--graph", "star3", "--n", "2",
                          "--base", "x,y", "--compare", "c c' b", "b")
    assert code == 0
    assert data["compare"]["equal"] is True
    assert data["compare"]["normal_forms"] == ["b", "b"]


def test_relhyp_generate_k6(capsys):
    code, data = run_json(capsys, "relhyp", "--graph", "K6")
    assert code == 0
    assert data["verdict"]["applies"] is True
    assert data["verdict"]["proper"] is True
    assert len(data["collection"]["members"]) == 10


def test_relhyp_collection_file(tmp_path, capsys):
    coll = tmp_path / "members.txt"
    coll.write_text("# one member per line\n0 1 2\n")
    code, data = run_json(capsys, "relhyp", "--graph", "K4",
                          "--collection", str(coll))
    assert code == 0
    assert len(data["collection"]["members"]) == 1


def test_oracle_command(capsys):
    code, data = run_json(capsys, "oracle", "--graph", "K5", "--n", "2")
    assert code == 0
    assert data["homology"]["betti1"] == 6
    assert data["homology"]["torsion"] == [2]
    assert data["group_trivial"] is False


def test_oracle_growth_budget_exhaustion_exit_2(capsys):
    code, data = run_json(capsys, "oracle", "--graph", "@rose(2)", "--n", "1",
                          "--radius", "6", "--budget-paths", "20")
    assert code == 2
    assert data["growth"]["complete"] is False


def test_export_graph_dot(capsys):
    code, out, _ = run(capsys, "export", "--graph", "star3", "--what", "graph")
    assert code == 0
    assert out.lstrip().startswith("graph ")


def test_export_skeleton_dot(capsys):
    code, out, _ = run(capsys, "export", "--graph", "star3", "--n", "2",
                       "--what", "skeleton")
    assert code == 0
    assert out.lstrip().startswith("graph ")
    assert "{w,x}" in out


def test_export_crossing_dot(capsys):
    code, out, _ = run(capsys, "export", "--graph", "K4", "--n", "2",
                       "--what", "crossing")
    assert code == 0
    assert out.lstrip().startswith("graph ")
    assert '"H0"' in out


# -- input handling ---------------------------------------------------------------

def test_graph_file_input(tmp_path, capsys):
    gf = tmp_path / "tri.txt"
    gf.write_text("graph tri\nv u\nv v\nv w\n"
                  "e a u v\ne b v w\ne c w u\n")
    code, data = run_json(capsys, "classify", "--graph", str(gf), "--n", "1")
    assert code == 0
    assert data["verdicts"]["infinite_cyclic"]["answer"] == "yes"


def test_dot_file_input(tmp_path, capsys):
    gf = tmp_path / "tri.dot"
    gf.write_text('graph tri {\n  u -- v;\n  v -- w;\n  w -- u;\n}\n')
    code, data = run_json(capsys, "complex", "--graph", str(gf), "--n", "1")
    assert code == 0
    assert data["complex"]["cells"] == {"0": 3, "1": 3}


def test_bad_family_exits_1(capsys):
    code, _, err = run(capsys, "classify", "--graph", "heptagram9", "--n", "2")
    assert code == 1
    assert err


def test_bad_base_exits_1(capsys):
    code, _, err = run(capsys, "word", "--graph", "star3", "--n", "2",
                       "--base", "x,nope", "--check", "a")
    assert code == 1


def test_illegal_word_is_reported_not_an_error(capsys):
    code, data = run_json(capsys, "word", "--graph", "star3", "--n", "2",
                          "--base", "x,y", "--check", "a")
    assert code == 0
    assert data["check"]["legal"] is False


def test_zero_particles_exits_1(capsys):
    code, _, err = run(capsys, "complex", "--graph", "star3", "--n", "0")
    assert code == 1


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, _, _ = run(capsys, "classify", "--graph", "K6", "--n", "2",
                     "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["verdicts"]["hyperbolic"]["answer"] == "no"


def test_byte_determinism(capsys):
    _, out1, _ = run(capsys, "classify", "--graph", "K5", "--n", "2")
    _, out2, _ = run(capsys, "classify", "--graph", "K5", "--n", "2")
    assert out1 == out2
    _, t1, _ = run(capsys, "oracle", "--graph", "star3", "--n", "2")
    _, t2, _ = run(capsys, "oracle", "--graph", "star3", "--n", "2")
    assert t1 == t2


def test_text_format_classify(capsys):
    code, out, _ = run(capsys, "classify", "--graph", "K5", "--n", "2",
                       "--format", "text")
    assert code == 0
    assert "hyperbolic: yes" in out


def test_table_text_format(capsys):
    code, out, _ = run(capsys, "table", "--family", "complete",
                       "--property", "hyperbolic", "--n", "1..3", "--m", "3..5",
                       "--format", "text")
    assert code == 0
    assert "yes" in out and "no" in out
