import json

import pytest

from cuphom.cli import main
from cuphom.forms import parse_form, serialize_form, surface_circle, torus3, trivial
from cuphom.geography import load_result


def write_form(path, form):
    path.write_text(serialize_form(form))
    return str(path)


def test_h_command(tmp_path, capsys):
    path = write_form(tmp_path / "t5.json", torus3(5))
    assert main(["h", path]) == 0
    assert capsys.readouterr().out == "h = 3\n"


def test_h_command_rank0(tmp_path, capsys):
    path = write_form(tmp_path / "r0.json", trivial(0))
    assert main(["h", path]) == 0
    assert capsys.readouterr().out == "h = 1/2\n"


def test_compute_text(tmp_path, capsys):
    path = write_form(tmp_path / "t5.json", torus3(5))
    assert main(["compute", path]) == 0
    out = capsys.readouterr().out
    assert "degree 0: Z/5" in out
    assert "even: Z^3 + Z/5" in out
    assert "odd: Z^3" in out
    assert out.endswith("h = 3\n")


def test_compute_rank0(tmp_path, capsys):
    path = write_form(tmp_path / "r0.json", trivial(0))
    assert main(["compute", path]) == 0
    out = capsys.readouterr().out
    assert "even: Z" in out and "odd: 0" in out and "h = 1/2" in out


def test_compute_json_stable(tmp_path, capsys):
    path = write_form(tmp_path / "t5.json", torus3(5))
    assert main(["compute", path, "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["compute", path, "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["even"] == "Z^3 + Z/5"
    assert doc["h"] == "3"
    assert list(doc) == ["rank", "prime", "degrees", "even", "odd", "h"]


def test_compute_mod_p(tmp_path, capsys):
    path = write_form(tmp_path / "t6.json", torus3(6))
    assert main(["compute", path, "--prime", "3"]) == 0
    out = capsys.readouterr().out
    assert "h_3 = 4" in out
    assert main(["compute", path, "--prime", "5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["h_5"] == "3"


def test_compute_dump_matrices(tmp_path, capsys):
    path = write_form(tmp_path / "t2.json", torus3(2))
    dump = tmp_path / "mats"
    assert main(["compute", path, "--dump-matrices", str(dump)]) == 0
    assert (dump / "boundary_3.txt").read_text() == "2\n"


def test_sum_command(tmp_path, capsys):
    a = write_form(tmp_path / "a.json", torus3(1))
    b = write_form(tmp_path / "b.json", trivial(1))
    out = tmp_path / "sum.json"
    assert main(["sum", a, b, "-o", str(out)]) == 0
    f = parse_form(out.read_text())
    assert f.rank == 4 and f.terms == ((1, 2, 3, 1),)


def test_builtin_command(tmp_path):
    out = tmp_path / "sc2.json"
    assert main(["builtin", "surface_circle", "--g", "2", "-o", str(out)]) == 0
    assert parse_form(out.read_text()) == surface_circle(2)
    out2 = tmp_path / "mt.json"
    assert main(["builtin", "mapping_torus", "--w", "1", "--v0", "2", "-o", str(out2)]) == 0
    assert parse_form(out2.read_text()).rank == 5


def test_builtin_wrong_params_exit2(tmp_path, capsys):
    out = tmp_path / "x.json"
    assert main(["builtin", "torus3", "--g", "2", "-o", str(out)]) == 2
    assert "error:" in capsys.readouterr().err


def test_bounds_command(capsys):
    assert main(["bounds", "--b", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "b\tS0\tS1\tS2\tL\tupper"
    assert out[1] == "5\t-9\t0\t9\t9\t16"


def test_verify_pass(tmp_path, capsys):
    path = write_form(tmp_path / "sc2.json", surface_circle(2))
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "verify: PASS" in out
    assert "FAIL" not in out


def test_verify_random_rank7(tmp_path, capsys):
    import random

    rng = random.Random(42)
    coeffs = {}
    from cuphom.exterior import blade_basis
    from cuphom.forms import ThreeForm

    for t in blade_basis(7, 3):
        a = rng.randint(-9, 9)
        if a:
            coeffs[t] = a
    path = write_form(tmp_path / "b7.json", ThreeForm.from_coeffs(7, coeffs))
    assert main(["verify", str(path)]) == 0
    assert "verify: PASS" in capsys.readouterr().out


def test_verify_with_primes(tmp_path, capsys):
    path = write_form(tmp_path / "t4.json", torus3(4))
    assert main(["verify", path, "--primes", "2,7"]) == 0
    out = capsys.readouterr().out
    assert "mod 2" in out and "mod 7" in out


def test_verify_bad_primes_exit2(tmp_path, capsys):
    path = write_form(tmp_path / "t4.json", torus3(4))
    assert main(["verify", path, "--primes", "2,x"]) == 2


def test_missing_file_exit2(capsys):
    assert main(["h", "/nonexistent/form.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_form_exit2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"rank": 3, "terms": [[3, 2, 1, 1]]}')
    assert main(["h", str(path)]) == 2
    assert "increasing" in capsys.readouterr().err


def test_unknown_subcommand_exit2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_geography_command(tmp_path, capsys):
    out = tmp_path / "b3.json"
    assert main(["geography", "--b", "3", "--coeff-max", "2", "--out", str(out)]) == 0
    res = load_result(out)
    assert sorted(res.realized) == [3, 4]
    assert "realized h: [3, 4]" in capsys.readouterr().out


def test_geography_sharded_cli(tmp_path, capsys):
    out = tmp_path / "b4.json"
    for shard in (1, 0, 2):
        code = main(["geography", "--b", "4", "--coeff-max", "1", "--out", str(out),
                     "--shards", "3", "--shard", str(shard)])
        assert code == 0
    direct = tmp_path / "direct.json"
    assert main(["geography", "--b", "4", "--coeff-max", "1", "--out", str(direct)]) == 0
    assert out.read_bytes() == direct.read_bytes()
