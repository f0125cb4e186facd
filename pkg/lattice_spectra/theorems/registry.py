"""Checker registry, verdicts, implication search and enumeration sweeps
"""

# Created:   18-Oct-2026

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import lattice_spectra.errors as errors
import lattice_spectra.gen as gen
from lattice_spectra.core import require_distributive
from lattice_spectra.debug import _initialize_logger
from lattice_spectra.theorems import minimal_primes, prime_ideals, special_ideals
from lattice_spectra.theorems.context import ASSERTION, EQUIVALENCE, IMPLICATION, LatticeContext


_logger = _initialize_logger('lattice_spectra.theorems')

REGISTRY = {entry.theorem_id: entry for entry in prime_ideals.ENTRIES + minimal_primes.ENTRIES + special_ideals.ENTRIES}


@dataclass
class VerdictRow:
    """Truth values of one block's conditions on one quantified instance
    """

    block: str
    instance: str
    values: Dict[str, bool]
    ok: bool

    def to_dict(self):
        return {'block': self.block, 'instance': self.instance, 'conditions': dict(self.values), 'ok': self.ok}


@dataclass
class TheoremVerdict:
    """Result of one checker entry on one lattice

    Attributes
    ----------
    holds : bool or None
        None when the entry was not evaluated (inapplicable or skipped)
    status : str
        'holds', 'fails', 'inapplicable' or 'skipped'
    rows : list of VerdictRow
        Every evaluated instance, in instance order
    """

    theorem_id: str
    lattice: str
    holds: Optional[bool]
    status: str
    rows: List[VerdictRow] = field(default_factory=list)
    degenerate: bool = False
    forced: bool = False
    reason: str = ''

    @property
    def failures(self):
        return [row for row in self.rows if not row.ok]

    @property
    def counterexample(self):
        failures = self.failures
        return failures[0] if failures else None

    def to_dict(self):
        counterexample = self.counterexample
        return {
            'theorem':          self.theorem_id,
            'lattice':          self.lattice,
            'holds':            self.holds,
            'degenerate':       self.degenerate,
            'counterexample':   None if counterexample is None else counterexample.to_dict(),
            'status':           self.status,
            'forced':           self.forced,
            'reason':           self.reason,
            'instances':        len(self.rows),
            'failures':         [row.to_dict() for row in self.failures],
        }


def get_entry(theorem_id):
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise errors.UnknownTheoremIdError('Unknown theorem id: {}'.format(theorem_id)) from None


def _row_ok(values, mode):
    truth = list(values.values())
    if mode == EQUIVALENCE:
        return len(set(truth)) <= 1
    if mode == ASSERTION:
        return all(truth)
    if mode == IMPLICATION:
        return not (truth[0] and not truth[1])
    raise ValueError('Unknown block mode: {}'.format(mode))


def _evaluate_block(ctx, block):
    rows = []
    for description, item in block.instances(ctx):
        values = {label: bool(evaluate(ctx, item)) for label, evaluate in block.conditions}
        rows.append(VerdictRow(block.tag, description, values, _row_ok(values, block.mode)))
    return rows


def check(lattice, theorem_id, force=False, options=None, context=None):
    """Runs one registry entry on a lattice

    Parameters
    ----------
    lattice : Lattice
        A distributive lattice
    theorem_id : str
        Registry id, e.g. 'T3.1'
    force : bool
        Evaluate entries that assume decomposability on any distributive lattice
    options : dict, optional
        Reading switches passed to the LatticeContext
    context : LatticeContext, optional
        Shared cache when several entries run on the same lattice

    Raises
    ------
    UnknownTheoremIdError
        theorem_id is not registered
    NotDistributiveError
        The lattice is not distributive
    """

    entry = get_entry(theorem_id)
    require_distributive(lattice)
    ctx = context if context is not None else LatticeContext(lattice, options)

    forced = False
    if entry.requires_decomposable and not ctx.decomposable:
        pair = ','.join(lattice.labels[x] for x in ctx.decomposition[1])
        if not force:
            return TheoremVerdict(theorem_id, lattice.name, None, 'inapplicable', degenerate=entry.degenerate,
                                  reason='not decomposable (pair {})'.format(pair))
        forced = True

    rows = []
    try:
        for block in entry.blocks:
            rows.extend(_evaluate_block(ctx, block))
    except errors.CapExceededError as error:
        _logger.warning('{} on {} skipped: {}'.format(theorem_id, lattice.name, error))
        return TheoremVerdict(theorem_id, lattice.name, None, 'skipped', degenerate=entry.degenerate, forced=forced, reason=str(error))

    holds = all(row.ok for row in rows)
    verdict = TheoremVerdict(theorem_id, lattice.name, holds, 'holds' if holds else 'fails', rows,
                             degenerate=entry.degenerate, forced=forced, reason=entry.note)
    _logger.debug('{} on {}: {} over {} instances'.format(theorem_id, lattice.name, verdict.status, len(rows)))
    return verdict


def check_all(lattice, force=False, options=None):
    """Runs every registry entry in registry order, sharing one context
    """

    ctx = LatticeContext(lattice, options)
    return [check(lattice, theorem_id, force=force, context=ctx) for theorem_id in REGISTRY]


@dataclass(frozen=True)
class Implication:
    """One direction between two conditions of a registry block
    """

    text: str
    theorem_id: str
    block: object
    antecedent: str
    consequent: str


def _strip_tag(label, tag):
    if tag and label.startswith(tag) and label != tag:
        return label[len(tag):]
    return label


def parse_implication(text):
    """Parses ids such as 'T3.1:(2)=>(1)', 'C3.3:(3)zero-prime=>chain' or 'C3.3:(3)<='

    A bare block tag followed by an arrow names the direction between the two
    conditions of that block. '=>' reads first condition implies second, '<='
    reads second implies first. Block (3) of C3.3 lists chain before
    zero-prime, so 'C3.3:(3)=>' is chain => zero-prime and 'C3.3:(3)<=' is
    zero-prime => chain, the direction K5 refutes.

    Raises
    ------
    UnknownImplicationIdError
        The id does not name a direction of a registered block
    """

    normalized = text.replace('⇒', '=>').replace('⇐', '<=').replace(' ', '')
    theorem_id, sep, rest = normalized.partition(':')
    if not sep or theorem_id not in REGISTRY:
        raise errors.UnknownImplicationIdError('Unknown implication id: {}'.format(text))
    entry = REGISTRY[theorem_id]

    if '=>' in rest:
        left, right = rest.split('=>', 1)
        reverse = False
    elif '<=' in rest:
        left, right = rest.split('<=', 1)
        reverse = True
    else:
        raise errors.UnknownImplicationIdError('Implication id needs => or <=: {}'.format(text))

    for block in entry.blocks:
        labels = block.labels
        if len(labels) < 2 or block.mode == ASSERTION:
            continue
        if not right and left == block.tag and len(labels) == 2:
            first, second = labels
        else:
            first, second = _strip_tag(left, block.tag), _strip_tag(right, block.tag)
            if first not in labels or second not in labels or first == second:
                continue
        if reverse:
            first, second = second, first
        return Implication(text, theorem_id, block, first, second)
    raise errors.UnknownImplicationIdError('Unknown implication id: {}'.format(text))


@dataclass
class Counterexample:
    lattice: object
    witness: VerdictRow

    def to_dict(self):
        return {'lattice': self.lattice.name, 'witness': self.witness.to_dict()}


def find_implication_failure(lattice, implication, options=None):
    """Returns the first instance where the antecedent holds and the consequent fails, or None
    """

    ctx = LatticeContext(lattice, options)
    evaluators = dict(implication.block.conditions)
    for description, item in implication.block.instances(ctx):
        antecedent = bool(evaluators[implication.antecedent](ctx, item))
        if antecedent and not evaluators[implication.consequent](ctx, item):
            values = {implication.antecedent: True, implication.consequent: False}
            return VerdictRow(implication.block.tag, description, values, False)
    return None


def search_counterexamples(implication_id, max_n, cap=None, options=None):
    """Scans every distributive lattice up to max_n elements for failures of one implication

    The decomposability guard is not applied.

    Returns
    -------
    found : list of Counterexample
        In enumeration order, each with its smallest witness
    """

    implication = parse_implication(implication_id)
    found = []
    for lattice in gen.enumerate_distributive(max_n, cap=cap):
        witness = find_implication_failure(lattice, implication, options)
        if witness is not None:
            _logger.debug('{} fails on {} at {}'.format(implication_id, lattice.name, witness.instance))
            found.append(Counterexample(lattice, witness))
    return found


@dataclass
class SweepReport:
    """Outcome of a sweep over all distributive lattices up to a size
    """

    max_n: int
    lattices: List[str]
    decomposable: List[str]
    verdicts: List[TheoremVerdict] = field(default_factory=list)
    counterexamples: List[Counterexample] = field(default_factory=list)
    implication: Optional[str] = None

    @property
    def failures(self):
        if self.implication is not None:
            return list(self.counterexamples)
        return [verdict for verdict in self.verdicts if verdict.holds is False]

    def to_dict(self):
        return {
            'max_n':            self.max_n,
            'lattices':         len(self.lattices),
            'decomposable':     len(self.decomposable),
            'failures':         len(self.failures),
            'implication':      self.implication,
            'counterexamples':  [found.to_dict() for found in self.counterexamples],
            'failed_verdicts':  [verdict.to_dict() for verdict in self.verdicts if verdict.holds is False],
        }


def _sweep_one(lattice, theorem_id, implication, options):
    ctx = LatticeContext(lattice, options)
    if implication is not None:
        return ctx.decomposable, [], find_implication_failure(lattice, implication, options)
    if not ctx.decomposable:
        return False, [], None
    ids = list(REGISTRY) if theorem_id is None else [theorem_id]
    return True, [check(lattice, tid, context=ctx) for tid in ids], None


def sweep(max_n, theorem_id=None, implication_id=None, threads=1, cap=None, options=None):
    """Enumerates distributive lattices up to max_n and checks the decomposable ones

    With an implication id every lattice is searched instead. Lattices may be
    processed on several threads; results keep enumeration order.

    Raises
    ------
    CapExceededError
        max_n needs more poset points than the cap
    """

    if theorem_id is not None:
        get_entry(theorem_id)
    implication = parse_implication(implication_id) if implication_id is not None else None
    report = SweepReport(max_n, [], [], implication=implication_id)

    def run(lattice):
        return lattice, _sweep_one(lattice, theorem_id, implication, options)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        for lattice, (decomposable, verdicts, witness) in executor.map(run, gen.enumerate_distributive(max_n, cap=cap)):
            report.lattices.append(lattice.name)
            if decomposable:
                report.decomposable.append(lattice.name)
            report.verdicts.extend(verdicts)
            if witness is not None:
                report.counterexamples.append(Counterexample(lattice, witness))
    _logger.debug('Sweep to {}: {} lattices, {} failures'.format(max_n, len(report.lattices), len(report.failures)))
    return report
