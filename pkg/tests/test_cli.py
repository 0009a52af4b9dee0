"""CLI determinism: byte-exact golden files for every corpus invocation.

Regenerate the goldens (after an intentional output change) with::

    python3 tests/test_cli.py --regenerate
"""

import contextlib
import io
import pathlib
import sys

import pytest

from quadalg.cli import main

HERE = pathlib.Path(__file__).resolve().parent
GOLDEN = HERE / "golden"
CORPUS = HERE.parent / "corpus"

CORPUS_NAMES = sorted(p.stem for p in CORPUS.glob("*.qa"))

# Degree-6 Koszulity legitimately fails for these corpus members.
NON_KOSZUL = {"nonkoszul_gf2", "gf7_seed3"}


def _f(stem: str) -> str:
    return str(CORPUS / f"{stem}.qa")


def _manifest():
    entries = []
    for stem in CORPUS_NAMES:
        entries.append((f"dual_{stem}", ["dual", _f(stem)], 0))
        entries.append((f"hilbert_{stem}", ["hilbert", "--max", "6", _f(stem)], 0))
        entries.append((f"koszul_{stem}", ["koszul", "--max", "6", _f(stem)],
                        1 if stem in NON_KOSZUL else 0))
        entries.append((f"ext_{stem}", ["ext", "--max", "4", _f(stem)], 0))
        entries.append((f"selfdual_{stem}", ["selfdual-check", _f(stem)], 0))
    entries += [
        ("product_black_sym2_ext2",
         ["product", "--kind", "black", _f("sym2"), _f("ext2")], 0),
        ("product_white_sym2_ext2",
         ["product", "--kind", "white", _f("sym2"), _f("ext2")], 0),
        ("product_black_gf7_seed1_gf7_seed2",
         ["product", "--kind", "black", _f("gf7_seed1"), _f("gf7_seed2")], 0),
        ("product_white_free2_sym3",
         ["product", "--kind", "white", _f("free2"), _f("sym3")], 0),
        ("hom_sym2_sym2", ["hom", _f("sym2"), _f("sym2")], 0),
        ("hom_ext2_sym2", ["hom", _f("ext2"), _f("sym2")], 0),
        ("selfdual_pair_sym2_ext2",
         ["selfdual-check", _f("sym2"), _f("ext2")], 0),
        ("laws_axioms_q",
         ["laws", "--suite", "axioms", "--trials", "3", "--seed", "0",
          _f("free2"), _f("sym2"), _f("ext2")], 0),
        ("laws_duality_q",
         ["laws", "--suite", "duality", "--trials", "3", "--seed", "0",
          _f("free2"), _f("sym2"), _f("ext2")], 0),
        ("laws_braiding_q",
         ["laws", "--suite", "braiding", "--trials", "3", "--seed", "0",
          _f("free1"), _f("sym2"), _f("ext2")], 0),
        ("laws_hom_algebra_q",
         ["laws", "--suite", "hom-algebra", "--trials", "3", "--seed", "0",
          _f("free1"), _f("sym2"), _f("ext2")], 0),
        ("laws_rigid_q",
         ["laws", "--suite", "rigid", "--trials", "3", "--seed", "0",
          _f("embed2"), _f("embed3")], 0),
        ("laws_axioms_gf7",
         ["laws", "--suite", "axioms", "--trials", "5", "--seed", "7",
          _f("gf7_seed1"), _f("gf7_seed2")], 0),
        ("dual_structured_sym2", ["dual", "--output", "structured",
                                  _f("sym2")], 0),
        ("hilbert_structured_sym2",
         ["hilbert", "--max", "6", "--output", "structured", _f("sym2")], 0),
        ("koszul_structured_nonkoszul_gf2",
         ["koszul", "--max", "6", "--output", "structured",
          _f("nonkoszul_gf2")], 1),
        ("ext_structured_free2",
         ["ext", "--max", "4", "--output", "structured", _f("free2")], 0),
        ("laws_structured_duality_q",
         ["laws", "--suite", "duality", "--trials", "3", "--seed", "0",
          "--output", "structured", _f("sym2"), _f("ext2")], 0),
    ]
    return entries


MANIFEST = _manifest()


def _run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = main(argv)
    return status, buf.getvalue()


@pytest.mark.parametrize("name,argv,want_status",
                         MANIFEST, ids=[m[0] for m in MANIFEST])
def test_golden(name, argv, want_status):
    status, text = _run(argv)
    golden = (GOLDEN / f"{name}.txt").read_text()
    assert text == golden, f"output drifted for {name}"
    assert status == want_status


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.qa"
    bad.write_text("field Q\nalgebra b\ngens x\nrel x*x*x\n")
    buf = io.StringIO()
    with contextlib.redirect_stdout(io.StringIO()), \
            contextlib.redirect_stderr(buf):
        status = main(["dual", str(bad)])
    assert status == 2
    assert buf.getvalue().startswith("error:")


def test_missing_file_exit_code():
    with contextlib.redirect_stdout(io.StringIO()), \
            contextlib.redirect_stderr(io.StringIO()):
        status = main(["dual", "/nonexistent/path.qa"])
    assert status == 2


def _regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv, want_status in MANIFEST:
        status, text = _run(argv)
        if status != want_status:
            raise SystemExit(
                f"{name}: exit status {status}, expected {want_status}")
        (GOLDEN / f"{name}.txt").write_text(text)
        print(f"wrote {name}.txt ({len(text)} bytes, exit {status})")


if __name__ == "__main__":
    if "--regenerate" in sys.argv:
        _regenerate()
    else:
        raise SystemExit(__doc__)
