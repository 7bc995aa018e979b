"""The command line: exit codes, output shapes, file round trips."""

import os

import pytest

from baltri import parse_bip, parse_tri, format_tri
from baltri.cli import main
from baltri.explorer import build_octahedron


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def octa_file(tmp_path):
    t, col = build_octahedron()
    p = tmp_path / "octa.tri"
    p.write_text(format_tri(t, col))
    return str(p)


class TestValidate:
    def test_gallery_entry(self, capsys):
        code, out, _ = run(capsys, "validate", "octahedron")
        assert code == 0
        assert "vertices 6" in out
        assert "edges 12" in out
        assert "faces 8" in out
        assert "euler 2" in out
        assert "orientable yes" in out
        assert "surface sphere" in out
        assert "balanced yes" in out

    def test_gallery_prefix(self, capsys):
        code, out, _ = run(capsys, "validate", "gallery:k333-torus")
        assert code == 0
        assert "surface torus" in out

    def test_file_input(self, capsys, octa_file):
        code, out, _ = run(capsys, "validate", octa_file)
        assert code == 0
        assert "coloring given" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "validate", "no/such/file.tri")
        assert code == 2
        assert "io error" in err

    def test_improper_coloring_is_a_domain_error(self, capsys, tmp_path):
        t, col = build_octahedron()
        bad = format_tri(t, col).replace("k 1 1 2 2 3 3", "k 1 1 1 2 3 3")
        p = tmp_path / "bad.tri"
        p.write_text(bad)
        code, _, err = run(capsys, "validate", str(p))
        assert code == 1
        assert "error" in err

    def test_textual_fault_exits_two(self, capsys, tmp_path):
        p = tmp_path / "broken.tri"
        p.write_text("p tri 6 8\nf 1 2\n")
        code, _, err = run(capsys, "validate", str(p))
        assert code == 2
        assert "parse error" in err


class TestCanon:
    def test_known_prefix(self, capsys):
        code, out, _ = run(capsys, "canon", "octahedron")
        assert code == 0
        assert out.strip().startswith("000600080000000100020001")

    def test_modes_differ_in_general(self, capsys):
        _, utp, _ = run(capsys, "canon", "octahedron", "--mode", "up-to-permutation")
        _, ign, _ = run(capsys, "canon", "octahedron", "--mode", "ignore")
        assert utp != ign  # the color suffix is present only when colored

    def test_isomorphs_agree(self, capsys, octa_file):
        _, a, _ = run(capsys, "canon", "octahedron")
        _, b, _ = run(capsys, "canon", octa_file)
        assert a == b


class TestSites:
    def test_filter_spellings(self, capsys):
        for flag in ("--kinds", "--kind", "--moves"):
            code, out, _ = run(capsys, "sites", "octahedron", flag, "bes")
            assert code == 0
            lines = out.strip().splitlines()
            assert len(lines) == 12
            assert all(ln.startswith("bes:") for ln in lines)

    def test_empty_result(self, capsys):
        code, out, _ = run(capsys, "sites", "octahedron", "--kinds", "ps,pc")
        assert code == 0
        assert out == ""

    def test_unknown_kind_is_an_argument_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sites", "octahedron", "--kinds", "zzz"])
        assert exc.value.code == 2


class TestApply:
    def test_pinned_vector(self, capsys, tmp_path):
        out_file = str(tmp_path / "eight.tri")
        code, _, _ = run(
            capsys, "apply", "octahedron", "bes:1,3,5,6", "-o", out_file
        )
        assert code == 0
        code, out, _ = run(capsys, "sites", out_file, "--kinds", "ps")
        assert code == 0
        assert "ps:5,1,8,7,3" in out.splitlines()

    def test_written_file_revalidates_byte_for_byte(self, capsys, tmp_path):
        out_file = str(tmp_path / "eight.tri")
        run(capsys, "apply", "octahedron", "bes:1,3,5,6", "-o", out_file)
        text = open(out_file).read()
        t, col = parse_tri(text)
        assert format_tri(t, col) == text

    def test_bad_site_kind(self, capsys):
        code, _, err = run(capsys, "apply", "octahedron", "zzz:1,2,3")
        assert code == 2
        assert "parse error" in err

    def test_inapplicable_site(self, capsys):
        code, _, err = run(capsys, "apply", "octahedron", "bes:1,2,3,4")
        assert code == 1
        assert "error" in err


class TestExpand:
    def test_default_recipe(self, capsys):
        code, out, _ = run(capsys, "expand", "octahedron", "bes:1,3,5,6")
        assert code == 0
        assert out.splitlines() == ["bts:1,3,5", "pc:9,3,7,8,1,6"]

    def test_blocked_recipe(self, capsys):
        code, _, err = run(
            capsys, "expand", "octahedron", "bes:1,3,5,6", "--via", "two-ps"
        )
        assert code == 1
        assert "blocking chord" in err

    def test_no_recipe_for_primitive_moves(self, capsys):
        code, _, err = run(capsys, "expand", "octahedron", "bts:1,3,5")
        assert code == 1
        assert "no expansion recipe" in err


class TestConnect:
    def test_octahedron_to_cube_subdivision(self, capsys):
        code, out, _ = run(
            capsys,
            "connect",
            "octahedron",
            "cube-subdivision",
            "--max-vertices",
            "14",
            "--max-states",
            "3000",
        )
        assert code == 0
        kinds = [ln.split(":")[0] for ln in out.strip().splitlines()]
        assert kinds == ["bts", "bes", "bes", "ps"]

    def test_caps_too_small(self, capsys):
        code, _, err = run(
            capsys,
            "connect",
            "octahedron",
            "cube-subdivision",
            "--max-vertices",
            "8",
            "--max-states",
            "50",
        )
        assert code == 1
        assert "error" in err


class TestBfs:
    def test_summary_and_export(self, capsys, tmp_path):
        out_dir = str(tmp_path / "view")
        code, out, _ = run(
            capsys,
            "bfs",
            "octahedron",
            "--max-vertices",
            "9",
            "--max-states",
            "200",
            "--out",
            out_dir,
        )
        assert code == 0
        assert "states 3" in out
        assert "edges 8" in out
        assert "truncated no" in out

        index = open(os.path.join(out_dir, "index.tsv")).read().splitlines()
        assert index[0] == "state\tvertices\tedges\tfaces\tsurface\tstart"
        assert len(index) == 4
        assert sum(ln.endswith("\tyes") for ln in index[1:]) == 1

        edges = open(os.path.join(out_dir, "edges.tsv")).read().splitlines()
        assert edges[0] == "src\tmove\tdst"
        assert len(edges) == 9

        states = sorted(os.listdir(os.path.join(out_dir, "states")))
        assert len(states) == 3
        for name in states:
            text = open(os.path.join(out_dir, "states", name)).read()
            t, col = parse_tri(text)
            assert format_tri(t, col) == text


class TestClassify:
    def test_octahedron(self, capsys):
        code, out, _ = run(capsys, "classify", "octahedron")
        assert code == 0
        assert "is_octahedron yes" in out
        assert "ps_applicable no" in out

    def test_cube_subdivision(self, capsys):
        code, out, _ = run(capsys, "classify", "cube-subdivision")
        assert code == 0
        assert "is_octahedron no" in out
        assert "ps_applicable yes" in out


class TestSample:
    def test_reproducible(self, capsys, tmp_path):
        a = str(tmp_path / "a.tri")
        b = str(tmp_path / "b.tri")
        args = ["sample", "octahedron", "--steps", "6", "--seed", "11",
                "--max-vertices", "12"]
        code1, out1, _ = run(capsys, *args, "-o", a)
        code2, out2, _ = run(capsys, *args, "-o", b)
        assert code1 == code2 == 0
        assert out1 == out2
        assert open(a).read() == open(b).read()
        t, col = parse_tri(open(a).read())
        assert t.vertex_count <= 12


class TestGallery:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "gallery")
        assert code == 0
        assert set(out.split()) == {"octahedron", "k333-torus", "cube-subdivision"}

    def test_print_one(self, capsys):
        code, out, _ = run(capsys, "gallery", "octahedron")
        assert code == 0
        t, col = parse_tri(out)
        assert t.vertex_count == 6
        assert col is not None

    def test_write_one(self, capsys, tmp_path):
        p = str(tmp_path / "k.tri")
        code, out, _ = run(capsys, "gallery", "k333-torus", "-o", p)
        assert code == 0
        text = open(p).read()
        t, col = parse_tri(text)
        assert format_tri(t, col) == text

    def test_unknown_entry(self, capsys):
        code, _, err = run(capsys, "gallery", "dodecahedron")
        assert code == 2
        assert "unknown gallery entry" in err


class TestBip:
    K33_TEXT = "p bip 6 9\nn 0 0 0 1 1 1\n" + "".join(
        f"e {i + 1} {j + 4}\n" for i in range(3) for j in range(3)
    )
    SCRIPT = "add-leaf 1 7\nsplit-edge 2 5 8 9\ndel-leaf 7\n"

    def test_apply(self, capsys, tmp_path):
        g = str(tmp_path / "g.bip")
        s = str(tmp_path / "s.ops")
        out_path = str(tmp_path / "h.bip")
        open(g, "w").write(self.K33_TEXT)
        open(s, "w").write(self.SCRIPT)
        code, _, _ = run(capsys, "bip", "apply", g, s, "-o", out_path)
        assert code == 0
        h = parse_bip(open(out_path).read())
        assert len(h.parts) == 8  # +2 from the split; leaf came and went
        assert h.min_degree() == 2

    def test_normalize(self, capsys, tmp_path):
        g = str(tmp_path / "g.bip")
        s = str(tmp_path / "s.ops")
        open(g, "w").write(self.K33_TEXT)
        open(s, "w").write(self.SCRIPT)
        code, out, _ = run(capsys, "bip", "normalize", g, s)
        assert code == 0
        assert out.splitlines() == ["split-edge 2 5 8 9"]

    def test_inapplicable_script(self, capsys, tmp_path):
        g = str(tmp_path / "g.bip")
        s = str(tmp_path / "s.ops")
        open(g, "w").write(self.K33_TEXT)
        open(s, "w").write("del-leaf 1\n")
        code, _, err = run(capsys, "bip", "apply", g, s)
        assert code == 1
        assert "error" in err
