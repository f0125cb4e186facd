"""Module containing the lattice_spectra renderer. It turns lattices, spectra, verdicts and
sweep reports into the text, JSON and DOT output of the command line front end.
"""

# Created:   18-Oct-2026

import json
import sys

import lattice_spectra.ideals as ideals
from lattice_spectra.core import distributivity_witness, is_totally_ordered
from lattice_spectra.decomp import is_decomposable


def _yes_no(value):
    return 'yes' if value else 'no'


def _ideal_list(lattice, items):
    items = sorted(items, key=lambda ideal: ideal.generator)
    if not items:
        return '(none)'
    return ', '.join(ideals.ideal_label(lattice, ideal) for ideal in items)


def fit_text(text, width):
    """Pads or truncates text to exactly width characters, marking cut text with ...
    """

    if len(text) <= width:
        return text.ljust(width)
    if width <= 3:
        return text[:width]
    return text[:width - 3] + '...'


def validation_report(lattice):
    """Summary of a validated lattice as an ordered dict of fields
    """

    witness = distributivity_witness(lattice)
    report = {
        'lattice':          lattice.name,
        'elements':         lattice.size,
        'bottom':           lattice.labels[0],
        'top':              lattice.labels[lattice.top],
        'covers':           len(lattice.cover_pairs),
        'distributive':     witness is None,
        'witness':          None if witness is None else [lattice.labels[x] for x in witness],
        'totally_ordered':  is_totally_ordered(lattice),
        'decomposable':     None,
        'failing_pair':     None,
        'label_map':        dict(lattice.label_map),
    }
    if witness is None:
        decomposable, found = is_decomposable(lattice)
        report['decomposable'] = decomposable
        if not decomposable:
            report['failing_pair'] = [lattice.labels[x] for x in found]
    return report


def dot_lines(lattice):
    """Hasse diagram as DOT, one edge per cover from lower to upper, in index order
    """

    lines = ['digraph "{}" {{'.format(lattice.name), '  rankdir=BT;']
    for x in lattice.elements:
        lines.append('  n{} [label="{}"];'.format(x, lattice.labels[x].replace('"', '\\"')))
    for lower, upper in sorted(lattice.cover_pairs):
        lines.append('  n{} -> n{};'.format(lower, upper))
    lines.append('}')
    return lines


class Renderer:
    """Writes command results to a stream, as text or as JSON

    Attributes
    ----------
    json_mode : bool
        Emit one JSON document per result instead of text
    quiet : bool
        Suppress all non-error output
    stream : file
        Output stream, stdout by default
    """

    def __init__(self, json_mode=False, quiet=False, stream=None):
        self.json_mode  = json_mode
        self.quiet      = quiet
        self._stream    = stream


    @property
    def stream(self):
        return self._stream if self._stream is not None else sys.stdout


    def _write_lines(self, lines):
        if self.quiet:
            return
        for line in lines:
            self.stream.write(line + '\n')


    def _write_json(self, document):
        if self.quiet:
            return
        self.stream.write(json.dumps(document, indent=2) + '\n')


    def error(self, message, stream=None):
        (stream or sys.stderr).write('error: {}\n'.format(message))


    def draw_validation(self, lattice):
        report = validation_report(lattice)
        if self.json_mode:
            self._write_json(report)
            return
        distributive = 'yes' if report['distributive'] else 'no (witness {})'.format(','.join(report['witness']))
        if report['decomposable'] is None:
            decomposable = 'n/a (not distributive)'
        elif report['decomposable']:
            decomposable = 'yes'
        else:
            decomposable = 'no (pair {})'.format(','.join(report['failing_pair']))
        self._write_lines([
            'lattice: {}'.format(report['lattice']),
            'elements: {}'.format(report['elements']),
            'bottom: {}'.format(report['bottom']),
            'top: {}'.format(report['top']),
            'covers: {}'.format(report['covers']),
            'distributive: {}'.format(distributive),
            'totally ordered: {}'.format(_yes_no(report['totally_ordered'])),
            'decomposable: {}'.format(decomposable),
        ])


    def draw_spectrum(self, lattice, report):
        if self.json_mode:
            self._write_json(report.to_dict(lattice))
            return
        lines = [
            'lattice: {}'.format(report.lattice_name),
            'ideals: {}'.format(_ideal_list(lattice, report.all_ideals)),
            'primes: {}'.format(_ideal_list(lattice, report.primes)),
            'minimal primes: {}'.format(_ideal_list(lattice, report.min_primes)),
            'values: {}'.format(_ideal_list(lattice, report.values)),
            'special ideals: {}'.format(_ideal_list(lattice, report.specials)),
            'polar ideals: {}'.format(_ideal_list(lattice, report.polar_ideals)),
            'ultrafilters: {}'.format(', '.join(ideals.filter_label(lattice, f) for f in report.ultrafilters) or '(none)'),
            'normality index: {}'.format(report.normality_index),
            'polar duality: {}'.format(_yes_no(report.polar_duality)),
            'Val:',
        ]
        for x, found in report.val_of.items():
            lines.append('  {}: {}'.format(lattice.labels[x], _ideal_list(lattice, found)))
        lines.append('S_P:')
        for prime in sorted(report.primes, key=lambda ideal: ideal.generator):
            lines.append('  {}: {}'.format(ideals.ideal_label(lattice, prime), ideals.ideal_label(lattice, report.s_p[prime.generator])))
        self._write_lines(lines)


    def draw_decomposition(self, lattice, decomposition):
        rows = sorted(zip(decomposition.parts, decomposition.values))
        if self.json_mode:
            self._write_json({
                'lattice':  lattice.name,
                'element':  lattice.labels[decomposition.element],
                'parts':    [{'part': lattice.labels[part], 'value': ideals.carrier_labels(lattice, value.carrier)} for part, value in rows],
            })
            return
        lines = [
            'element: {} in {}'.format(lattice.labels[decomposition.element], lattice.name),
            'parts: {}'.format(', '.join(lattice.labels[part] for part, _ in rows)),
        ]
        for part, value in rows:
            lines.append('  {}: value {}'.format(lattice.labels[part], ideals.ideal_label(lattice, value)))
        self._write_lines(lines)


    def _verdict_lines(self, verdict):
        status = verdict.status
        if verdict.forced:
            status += ' (forced)'
        if verdict.status in ('inapplicable', 'skipped'):
            status += ' ({})'.format(verdict.reason)
        lines = ['{} on {}: {}'.format(verdict.theorem_id, verdict.lattice, status)]
        for row in verdict.failures:
            tag = '[{}] '.format(row.block) if row.block else ''
            values = ' '.join('{}={}'.format(label, _yes_no(value)) for label, value in row.values.items())
            lines.append('  {}{}: {}'.format(tag, row.instance, values))
        return lines


    def draw_verdicts(self, verdicts):
        if self.json_mode:
            document = [verdict.to_dict() for verdict in verdicts]
            self._write_json(document[0] if len(document) == 1 else document)
            return
        lines = []
        for verdict in verdicts:
            lines.extend(self._verdict_lines(verdict))
        if len(verdicts) > 1:
            counts = {status: sum(1 for v in verdicts if v.status == status) for status in ('holds', 'fails', 'inapplicable', 'skipped')}
            lines.append('checked: {}, holds: {}, fails: {}, inapplicable: {}, skipped: {}'.format(
                len(verdicts), counts['holds'], counts['fails'], counts['inapplicable'], counts['skipped']))
        self._write_lines(lines)


    def draw_sweep(self, report):
        if self.json_mode:
            self._write_json(report.to_dict())
            return
        lines = []
        for found in report.counterexamples:
            values = ' '.join('{}={}'.format(label, _yes_no(value)) for label, value in found.witness.values.items())
            lines.append('{}: {} {}'.format(found.lattice.name, found.witness.instance, values))
        for verdict in report.verdicts:
            if verdict.holds is False:
                lines.extend(self._verdict_lines(verdict))
        lines.append('lattices: {}, decomposable: {}, failures: {}'.format(len(report.lattices), len(report.decomposable), len(report.failures)))
        self._write_lines(lines)


    def draw_catalog(self, entries):
        if self.json_mode:
            self._write_json([{'name': entry.name, 'elements': entry.lattice.size, **entry.flags} for entry in entries])
            return

        def flag(value):
            return 'n/a' if value is None else _yes_no(value)

        lines = []
        for entry in entries:
            flags = entry.flags
            lines.append('{} {:>2}  distributive={} decomposable={} strongly-projectable={} projectable={}'.format(
                fit_text(entry.name, 6), entry.lattice.size, flag(flags['distributive']), flag(flags['decomposable']),
                flag(flags['strongly_projectable']), flag(flags['projectable'])))
        self._write_lines(lines)


    def draw_dot(self, lattice, path=None):
        """Writes the DOT digraph to a file, or to the output stream when no path is given
        """

        text = '\n'.join(dot_lines(lattice)) + '\n'
        if path is None:
            if not self.quiet:
                self.stream.write(text)
            return
        with open(path, 'w', encoding='utf-8', newline='\n') as fp:
            fp.write(text)
