"""Golden U(3) ideal listings against the ``ideal`` command."""

import importlib.util

import pytest

from cliffkahler import Signature
from cliffkahler.cli import cmd_ideal
from conftest import GOLDEN

_module_spec = importlib.util.spec_from_file_location("make_golden", GOLDEN / "make_golden.py")
make_golden = importlib.util.module_from_spec(_module_spec)
_module_spec.loader.exec_module(make_golden)

CASES = {"u3_r33": (3, 3), "u3_r34": (3, 4), "u3_r35": (3, 5)}


@pytest.mark.parametrize("case", CASES)
def test_fixture_regenerates(case):
    stored = (GOLDEN / f"{case}.txt").read_text(encoding="utf-8")
    assert make_golden.golden_text(case) == stored


@pytest.mark.parametrize("case", CASES)
def test_cli_matches_golden(case):
    stored = (GOLDEN / f"{case}.txt").read_text(encoding="utf-8")
    assert cmd_ideal(Signature(*CASES[case]), structure="u3").render() == stored


def test_raw_listing_lengths():
    assert [len(make_golden.read_raw(f"raw_{c}.txt")) for c in CASES] == [8, 16, 32]


def test_unsorted_transcription_converts():
    # the exterior-form listing writes paired blades such as e1425 = -e1245
    (label, terms), = make_golden.read_raw("raw_pq_omega3.txt")
    f_line = make_golden.golden_text("u3_r33").splitlines()[2]
    assert f_line == "f = " + make_golden.render(terms)


def test_same_f_in_every_listing():
    heads = {make_golden.golden_text(c).splitlines()[2] for c in CASES}
    assert len(heads) == 1
