from fqtutte.cli import main

TRIANGLE = "3 3\n0 1\n1 2\n0 2\n"
W3 = "2 1 3 4\n1 1 0 1\n1 0 1 1\n0 1 1 1\n"
CNF = "p cnf 2 2\n1 2 0\n-1 2 0\n"


def run(argv):
    return main(argv)


def test_compute_triangle_all_algos_byte_identical(tmp_path):
    g = tmp_path / "tri.graph"
    g.write_text(TRIANGLE)
    outs = []
    for algo in ("def", "general", "wt2"):
        out = tmp_path / ("tri_%s.poly" % algo)
        assert run(["compute", str(g), "--algo", algo, "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]
    body = outs[0].decode().splitlines()
    assert body[0] == "tutte 2 3"
    assert body[1:] == ["0 1 1", "1 0 1", "2 0 1"]


def test_compute_matrix_input(tmp_path, capsys):
    mat = tmp_path / "id.mat"
    mat.write_text("2 1 3 3\n1 0 0\n0 1 0\n0 0 1\n")
    assert run(["compute", str(mat), "--algo", "wt2"]) == 0
    captured = capsys.readouterr()
    assert "3 0 1" in captured.out  # x^3


def test_compute_weight_guard(tmp_path):
    f = tmp_path / "w3.mat"
    f.write_text(W3)
    assert run(["compute", str(f), "--algo", "wt2"]) == 3
    assert run(["compute", str(f), "--algo", "def"]) == 0


def test_compute_parse_error(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("nonsense\n")
    assert run(["compute", str(f)]) == 2


def test_compute_too_many_columns(tmp_path):
    f = tmp_path / "wide.mat"
    cols = 25
    f.write_text("2 1 1 %d\n%s\n" % (cols, " ".join(["1"] * cols)))
    assert run(["compute", str(f), "--algo", "def"]) == 3


def test_eval(tmp_path, capsys):
    g = tmp_path / "tri.graph"
    g.write_text(TRIANGLE)
    out = tmp_path / "tri.poly"
    run(["compute", str(g), "--out", str(out)])
    assert run(["eval", str(out), "--x", "1", "--y", "1"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert run(["eval", str(out), "--x", "2", "--y", "2"]) == 0
    assert capsys.readouterr().out.strip() == "8"  # 2^m


def test_verify_critical_pass_and_fail(tmp_path, capsys):
    g = tmp_path / "tri.graph"
    g.write_text(TRIANGLE)
    assert run(["verify-critical", str(g), "--d", "1", "--algo", "def"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "direct=0" in out
    bad = tmp_path / "bad.poly"
    bad.write_text("tutte 2 3\n0 1 2\n2 0 1\n")
    assert (
        run(["verify-critical", str(g), "--d", "1", "--poly", str(bad)]) == 1
    )
    assert "FAIL" in capsys.readouterr().out


def test_reduce_thm1_verified(tmp_path, capsys):
    f = tmp_path / "tiny.cnf"
    f.write_text(CNF)
    out = tmp_path / "g.mat"
    code = run(["reduce", str(f), "--chain", "thm1", "--out", str(out), "--verify"])
    assert code == 0
    assert "verify=PASS" in capsys.readouterr().out
    header = out.read_text().splitlines()[0].split()
    assert len(header) == 4


def test_reduce_thm2_verified(tmp_path, capsys):
    f = tmp_path / "tiny.csp"
    f.write_text("csp 2 1\nsides 1 0 1\ndom 1\ndom 1\ncon 2 0 1 1 0 0\n")
    out = tmp_path / "g.mat"
    code = run(["reduce", str(f), "--chain", "thm2", "--out", str(out), "--verify"])
    assert code == 0
    assert "verify=PASS" in capsys.readouterr().out


def test_gen_families(tmp_path):
    out = tmp_path / "g.graph"
    assert run(["gen", "--family", "graphic", "--k", "4", "--m", "8",
                "--seed", "3", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "5 8"
    out2 = tmp_path / "w.mat"
    assert run(["gen", "--family", "random-wt2", "--k", "3", "--q", "4",
                "--m", "6", "--seed", "1", "--out", str(out2)]) == 0
    assert out2.read_text().splitlines()[0] == "2 2 3 6"
    # deterministic: same seed, same bytes
    out3 = tmp_path / "w2.mat"
    run(["gen", "--family", "random-wt2", "--k", "3", "--q", "4",
         "--m", "6", "--seed", "1", "--out", str(out3)])
    assert out2.read_bytes() == out3.read_bytes()


def test_bench_csv_shape(capsys):
    assert run(["bench", "--family", "graphic", "--k", "5", "--m", "10",
                "--reps", "3", "--algos", "general,wt2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("family,algo,k,q,m,seed,rep,wall_s")
    assert len(lines) == 1 + 3 * 2  # reps x algos
    for row in lines[1:]:
        assert len(row.split(",")) == len(lines[0].split(","))


def test_threads_flag(tmp_path):
    g = tmp_path / "tri.graph"
    g.write_text(TRIANGLE)
    o1, o2 = tmp_path / "a.poly", tmp_path / "b.poly"
    assert run(["--threads", "3", "compute", str(g), "--algo", "def",
                "--out", str(o1)]) == 0
    assert run(["compute", str(g), "--algo", "def", "--out", str(o2)]) == 0
    assert o1.read_bytes() == o2.read_bytes()
