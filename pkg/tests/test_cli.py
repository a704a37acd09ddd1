import json

import pytest

from schursample import jsonio
from schursample.cli import main
from schursample.render import RenderStyle, render_svg
from schursample.sampler import schur_sample
from schursample.tilings import DominoTiling, to_plane_partition, to_steep_tiling
from schursample.words import parse_word


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sample_roundtrips_through_json(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--word", "(<'>)^2", "--z", "1,1,1,1", "--seed", "7"
    )
    assert code == 0
    obj = jsonio.loads(out.strip())
    obj.validate()
    direct = schur_sample(parse_word("(<'>)^2"), (1, 1, 1, 1), 7)
    assert obj.lambdas == direct.lambdas
    assert obj.seed == 7


def test_sample_count_ordered_and_deterministic(capsys):
    args = ("sample", "--word", "<>", "--q", "1/2", "--seed", "3", "--count", "8")
    code, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 8


def test_zfun_cli(capsys):
    code, out, _ = run_cli(capsys, "zfun", "--word", "<>", "--z", "1/2,1/2")
    assert code == 0
    assert out.strip() == "4/3"


def test_zfun_symmetric_cli(capsys):
    code, out, _ = run_cli(
        capsys, "zfun", "--word", "<", "--z", "1/3", "--t", "1/2", "--mode", "even-rows"
    )
    assert code == 0
    assert out.strip() == "36/35"


def test_cli_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "sample", "--word", "<>", "--z", "1,1")
    assert code == 1
    assert "diverges" in err or "error" in err


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["sample"])  # missing --word
    assert exc.value.code == 2


def test_verify_cli_passes(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--word", "(<'>)^2", "--z", "1,1,1,1",
        "--cap", "50", "--samples", "4000", "--seed", "11",
    )
    assert code == 0
    assert "PASS" in out


def test_convert_and_render_pipeline(capsys, tmp_path, monkeypatch):
    s = schur_sample(parse_word("(<)^3(>)^3"), (0.5,) * 6, 5)
    sample_file = tmp_path / "sample.json"
    sample_file.write_text(jsonio.dumps(s))
    code, out, _ = run_cli(
        capsys, "convert", "--to", "plane-partition", "--input", str(sample_file)
    )
    assert code == 0
    view = jsonio.loads(out.strip())
    assert view.rows == to_plane_partition(s.word, s.lambdas).rows
    view_file = tmp_path / "view.json"
    view_file.write_text(out.strip())
    svg_file = tmp_path / "out.svg"
    code, _, _ = run_cli(
        capsys, "render", "--style", "lozenge", "--input", str(view_file),
        "--out", str(svg_file),
    )
    assert code == 0
    assert svg_file.read_text().startswith("<svg")


def test_render_deterministic_bytes():
    s = schur_sample(parse_word("(<'>)^4"), (1,) * 8, 123)
    t = to_steep_tiling(s.word, s.lambdas)
    a = render_svg(t, RenderStyle(model="domino"))
    b = render_svg(t, RenderStyle(model="domino"))
    assert a == b and a.startswith("<svg")
    m = render_svg(t, RenderStyle(model="maya-particles"))
    assert m.startswith("<svg")


def test_render_empty_tiling():
    t = DominoTiling(parse_word("(<'>)^1"), (-3, 3), ())
    svg = render_svg(t, RenderStyle(model="domino"))
    assert svg.startswith("<svg") and svg.endswith("</svg>")


def test_json_symmetric_roundtrip():
    from schursample.symmetric import symmetric_schur_sample

    s = symmetric_schur_sample(parse_word("<<'"), (0.3, 0.4), 0.5, "free", 2)
    back = jsonio.loads(jsonio.dumps(s))
    assert back.lambdas == s.lambdas and back.mode == "free"
