import pytest # noqa

import io
import json

from lattice_spectra.renderer import dot_lines, fit_text, validation_report
from lattice_spectra.theorems import check, sweep
from lattice_spectra.decomp import decompose_special


def test_fit_text():
    assert fit_text('K5', 6) == 'K5    '
    assert fit_text('G3x4', 4) == 'G3x4'
    assert fit_text('random:4@17', 8) == 'rando...'
    assert fit_text('abcdef', 2) == 'ab'


def test_validation_report(KITE, CATALOG):
    report = validation_report(KITE)
    assert report['distributive'] is True
    assert report['decomposable'] is False
    assert report['failing_pair'] == ['a', 'b']
    assert report['label_map']['1'] == 4
    pentagon = validation_report(CATALOG('N5'))
    assert pentagon['decomposable'] is None
    assert pentagon['witness'] == ['c', 'a', 'b']


def test_dot_quotes_labels(LATTICE):
    lattice = LATTICE(['0', 'say "hi"'], [('0', 'say "hi"')], name='Q')
    assert '  n1 [label="say \\"hi\\""];' in dot_lines(lattice)


def test_draw_verdicts_summary(RENDERER, CATALOG):
    stream = io.StringIO()
    chain = CATALOG('C3')
    RENDERER(stream).draw_verdicts([check(chain, 'T3.1'), check(chain, 'T3.5')])
    lines = stream.getvalue().splitlines()
    assert lines[0] == 'T3.1 on C3: holds'
    assert lines[1] == 'T3.5 on C3: holds'
    assert lines[-1] == 'checked: 2, holds: 2, fails: 0, inapplicable: 0, skipped: 0'


def test_draw_decomposition_json(RENDERER, CATALOG):
    stream = io.StringIO()
    square = CATALOG('B2')
    RENDERER(stream, json_mode=True).draw_decomposition(square, decompose_special(square, square.top))
    document = json.loads(stream.getvalue())
    assert [row['part'] for row in document['parts']] == ['x', 'y']
    assert document['parts'][0]['value'] == ['0', 'y']


def test_draw_sweep_json(RENDERER):
    stream = io.StringIO()
    RENDERER(stream, json_mode=True).draw_sweep(sweep(4))
    document = json.loads(stream.getvalue())
    assert document['lattices'] == 5
    assert document['failures'] == 0
    assert document['failed_verdicts'] == []


def test_quiet_renderer(RENDERER, KITE):
    stream = io.StringIO()
    renderer = RENDERER(stream, quiet=True)
    renderer.draw_validation(KITE)
    renderer.draw_dot(KITE)
    assert stream.getvalue() == ''


def test_error_stream(RENDERER):
    stream, errors = io.StringIO(), io.StringIO()
    RENDERER(stream).error('bad input', errors)
    assert stream.getvalue() == ''
    assert errors.getvalue() == 'error: bad input\n'
