"""Command-line front end.

Every command builds a :class:`Report` holding human-readable lines and
machine-readable ``key: value`` pairs; ``--format`` picks which is printed.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .chain import build_complex, generic_homology_dims, homology_dims, probe_weights, verify_d2
from .degree import UnsupportedDimensionError, degree_table
from .faces import bounded_chambers, enumerate_faces
from .flags import NonGenericFlagError, OrientedFlag, build_flag, is_generic, partition, sign_of
from .formats import (InputError, Problem, format_signs, format_structured, format_vector,
                      parse_flag_file, parse_input)
from .geometry import ArrangementError
from .laurent import ZeroWeightError
from .lattice import build_lattice, poincare
from .pi1 import abelianize, presentation, word_to_string
from .salvetti import build_salvetti, euler_characteristic

COMMANDS = ("lattice", "chambers", "partition", "salvetti", "degrees", "complex",
            "homology", "resonance-scan", "pi1")
MAX_GRID = 10_000

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class InvariantViolation(RuntimeError):
    pass


@dataclass
class Job:
    input: str
    command: str
    flag_seed: Optional[int] = None
    flag_file: Optional[str] = None
    weights: List[Tuple[Fraction, ...]] = field(default_factory=list)
    grid: Optional[str] = None
    format: str = "text"
    method: str = "exact"


@dataclass
class Report:
    text: List[str] = field(default_factory=list)
    pairs: List[Tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value, text: Optional[str] = None):
        self.pairs.append((key, str(value)))
        if text is not None:
            self.text.append(text)

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            return format_structured(self.pairs)
        return "\n".join(self.text) + "\n"


def parse_weights(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed weight list {text!r}", None, "--q") from None


def expand_grid(spec: str, n: int) -> List[Tuple[Fraction, ...]]:
    """``"a,b,c"`` uses the same values on every coordinate; ``"a,b;c;d,e"`` sets them per coordinate."""
    axes = [parse_weights(part) for part in spec.split(";")]
    if len(axes) == 1:
        axes = axes * n
    if len(axes) != n:
        raise InputError(f"grid has {len(axes)} axes, expected {n}", None, "--q-grid")
    size = 1
    for a in axes:
        size *= len(a)
    if size > MAX_GRID:
        raise InputError(f"grid has {size} points (limit {MAX_GRID})", None, "--q-grid")
    return [tuple(p) for p in itertools.product(*axes)]


def fmt_tuple(values: Sequence) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def resolve_flag(job: Job, problem: Problem, report: Report) -> OrientedFlag:
    arr = problem.arrangement
    if job.flag_file is not None:
        flag, source = parse_flag_file(job.flag_file, arr.dim), "file"
    elif job.flag_seed is None and problem.flag is not None:
        flag, source = problem.flag, "input"
    else:
        seed = job.flag_seed or 0
        flag, source = build_flag(arr, seed=seed), "seed"
        report.add("flag.seed", seed)
    if not is_generic(arr, flag):
        raise NonGenericFlagError("the flag is not generic for this arrangement")
    report.add("flag.source", source)
    report.add("flag.base", format_vector(flag.basepoint))
    for i, v in enumerate(flag.basis, start=1):
        report.add(f"flag.v{i}", format_vector(v))
    label = f"seed {job.flag_seed or 0}" if source == "seed" else source
    report.text.append(f"flag: base {format_vector(flag.basepoint)}, basis "
                       + ", ".join(format_vector(v) for v in flag.basis) + f"  [{label}]")
    return flag


# ----------------------------------------------------------------- commands

def cmd_lattice(job, problem, report):
    lat = build_lattice(problem.arrangement)
    pi = poincare(lat)
    report.add("poincare", " ".join(map(str, pi.coeffs)), f"pi(A,t) = {pi}")
    report.add("beta", pi.beta, f"beta = {pi.beta}")
    counts = lat.rank_counts()
    for r, c in enumerate(counts):
        report.add(f"flats.rank{r}", c)
    report.text.append("flats by rank: " + ", ".join(map(str, counts)))
    for X in sorted(lat.flats, key=lambda X: (X.rank, sorted(X.ids))):
        if X.rank == 0:
            continue
        ids = ",".join(map(str, sorted(X.ids)))
        report.add(f"flat.{ids}", f"rank={X.rank} mu={lat.mobius[X.ids]}",
                   f"  {{{ids}}}: rank {X.rank}, mu {lat.mobius[X.ids]}")


def cmd_chambers(job, problem, report):
    arr = problem.arrangement
    poset = enumerate_faces(arr)
    chambers = poset.chambers
    bounded = set(bounded_chambers(arr, [C.signs for C in chambers]))
    report.add("chambers", len(chambers), f"chambers: {len(chambers)}")
    report.add("bounded", len(bounded), f"bounded chambers: {len(bounded)}")
    counts = poset.counts()
    for d, c in enumerate(counts):
        report.add(f"faces.dim{d}", c)
    report.text.append("faces by dimension: " + ", ".join(map(str, counts)))
    for C in chambers:
        tag = "bounded" if C.signs in bounded else "unbounded"
        key = format_signs(C.signs)
        report.add(f"chamber.{key}", f"{format_vector(C.point)} {tag}",
                   f"  {key}  {tag:9}  at {format_vector(C.point)}")


def cmd_partition(job, problem, report):
    arr = problem.arrangement
    flag = resolve_flag(job, problem, report)
    part = partition(arr, flag)
    sizes = part.sizes()
    for k, s in enumerate(sizes):
        report.add(f"ch{k}", s)
    report.text.append(", ".join(f"ch{k}: {s}" for k, s in enumerate(sizes)))
    for k in range(arr.dim + 1):
        for i, C in enumerate(part.levels[k], start=1):
            s = sign_of(arr, flag, C, k)
            key = format_signs(C)
            report.add(f"ch{k}.{i}", f"{key} sign={s:+d}",
                       f"  ch{k}[{i}] = {key}  sign {s:+d}")


def cmd_salvetti(job, problem, report):
    sal = build_salvetti(problem.arrangement)
    counts = sal.counts()
    for d, c in enumerate(counts):
        report.add(f"cells.dim{d}", c)
    chi = euler_characteristic(sal)
    report.text.append("cells by dimension: " + ", ".join(map(str, counts)))
    report.add("euler", chi, f"euler characteristic: {chi}")
    for i, (a, b) in enumerate(sal.covering_pairs(), start=1):
        edge = (f"{format_signs(a.face)}|{format_signs(a.chamber)} < "
                f"{format_signs(b.face)}|{format_signs(b.chamber)}")
        report.add(f"edge.{i}", edge, f"  {edge}")


def _complex(job, problem, report):
    arr = problem.arrangement
    flag = resolve_flag(job, problem, report)
    cx = build_complex(arr, flag, method=job.method)
    if not verify_d2(cx):
        raise InvariantViolation("boundary of boundary is not zero")
    return cx


def cmd_degrees(job, problem, report):
    arr = problem.arrangement
    flag = resolve_flag(job, problem, report)
    part = partition(arr, flag)
    for k in range(1, arr.dim + 1):
        report.text.append(f"deg: ch{k} x ch{k - 1}")
        table = degree_table(arr, flag, part, k, job.method)
        for C in part.levels[k]:
            row = []
            for Cp in part.levels[k - 1]:
                d = table[(C, Cp)]
                report.add(f"deg{k}.{format_signs(C)}.{format_signs(Cp)}", d)
                row.append(f"{d:+d}" if d else " 0")
            report.text.append(f"  {format_signs(C)}: " + " ".join(row))


def cmd_complex(job, problem, report):
    cx = _complex(job, problem, report)
    for k in range(cx.top + 1):
        for i, C in enumerate(cx.levels[k], start=1):
            report.add(f"basis{k}.{i}", format_signs(C))
    for k in range(1, cx.top + 1):
        report.text.append(f"boundary d{k}: C{k} -> C{k - 1}")
        for j, C in enumerate(cx.levels[k]):
            report.text.append(f"  d[{format_signs(C)}] =")
            for i, Cp in enumerate(cx.levels[k - 1]):
                e = cx.boundaries[k][i][j]
                report.add(f"d{k}[{i + 1},{j + 1}]", e)
                if e:
                    report.text.append(f"    ({e}) [{format_signs(Cp)}]")
    report.add("d2", "zero", "d o d = 0: verified")


def _assignments(job, n) -> List[Tuple[Fraction, ...]]:
    points = list(job.weights)
    if job.grid:
        points += expand_grid(job.grid, n)
    for p in points:
        if len(p) != n:
            raise InputError(f"weight list {fmt_tuple(p)} has {len(p)} entries, expected {n}",
                             None, "--q")
        if any(v == 0 for v in p):
            raise InputError("weights must be nonzero", None, "--q")
    return points


def cmd_homology(job, problem, report):
    cx = _complex(job, problem, report)
    points = _assignments(job, cx.nvars)
    if not points and problem.weights is not None:
        points = [problem.weights]
    if not points:
        g = generic_homology_dims(cx)
        report.add("q", fmt_tuple(probe_weights(cx.nvars)))
        report.add("h", fmt_tuple(g), f"h = {fmt_tuple(g)}  (generic weights)")
        return
    for q in points:
        h = homology_dims(cx, q)
        if len(points) == 1:
            report.add("q", fmt_tuple(q))
            report.add("h", fmt_tuple(h), f"h = {fmt_tuple(h)}")
        else:
            report.add(f"h{fmt_tuple(q)}", fmt_tuple(h), f"q = {fmt_tuple(q)}: h = {fmt_tuple(h)}")


def cmd_resonance_scan(job, problem, report):
    cx = _complex(job, problem, report)
    points = _assignments(job, cx.nvars)
    if not points:
        raise InputError("resonance-scan needs --q or --q-grid", None, "arguments")
    generic = generic_homology_dims(cx)
    report.add("generic", fmt_tuple(generic), f"generic h = {fmt_tuple(generic)}")
    below = [1] if cx.top == 2 else range(cx.top)
    hits = 0
    for q in points:
        h = homology_dims(cx, q)
        res = any(h[k] != generic[k] for k in below)
        hits += res
        report.add(f"scan{fmt_tuple(q)}", f"h={fmt_tuple(h)} resonant={'yes' if res else 'no'}",
                   f"  q = {fmt_tuple(q)}: h = {fmt_tuple(h)}{'  RESONANT' if res else ''}")
    report.add("resonant", hits, f"resonant points: {hits} of {len(points)}")


def cmd_pi1(job, problem, report):
    arr = problem.arrangement
    flag = resolve_flag(job, problem, report)
    pres = presentation(arr, flag)
    report.add("generators", pres.ngens)
    report.text.append(str(pres))
    for i, (w, C) in enumerate(zip(pres.relations, pres.chambers), start=1):
        report.add(f"relation.{i}", word_to_string(w))
        report.add(f"relation.{i}.chamber", format_signs(C))
        report.text.append(f"  R({format_signs(C)}) = {word_to_string(w)}")
    rank, torsion = abelianize(pres)
    ab = " + ".join([f"Z^{rank}"] + [f"Z/{d}" for d in torsion])
    report.add("abelianization", ab, f"abelianization: {ab}")


HANDLERS = {
    "lattice": cmd_lattice, "chambers": cmd_chambers, "partition": cmd_partition,
    "salvetti": cmd_salvetti, "degrees": cmd_degrees, "complex": cmd_complex,
    "homology": cmd_homology, "resonance-scan": cmd_resonance_scan, "pi1": cmd_pi1,
}


def run(job: Job) -> Tuple[int, Report]:
    report = Report()
    try:
        problem = parse_input(job.input)
        report.pairs += [("command", job.command), ("input", job.input),
                         ("dim", str(problem.arrangement.dim)),
                         ("hyperplanes", str(len(problem.arrangement)))]
        HANDLERS[job.command](job, problem, report)
    except InvariantViolation as exc:
        report.add("error", f"invariant: {exc}", f"invariant violation: {exc}")
        return EXIT_INVARIANT, report
    except (InputError, ArrangementError, NonGenericFlagError, UnsupportedDimensionError,
            ZeroWeightError, ValueError) as exc:
        report.add("error", str(exc), f"error: {exc}")
        return EXIT_INPUT, report
    return EXIT_OK, report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arrangement-cw",
        description="Minimal twisted chain complexes of real hyperplane arrangements.")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--command", required=True, choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--flag-seed", type=int, metavar="N")
    src.add_argument("--flag-file", metavar="PATH")
    p.add_argument("--q", "-q", action="append", default=[], metavar="LIST",
                   help="comma-separated weights q1,...,qn (repeatable)")
    p.add_argument("--q-grid", metavar="SPEC",
                   help="'a,b,c' on every coordinate, or per-coordinate sets split by ';'")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--method", choices=("exact", "winding"), default="exact",
                   help="degree computation in dimension 3")
    return p


def main(argv: Sequence[str] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        weights = [parse_weights(q) for q in args.q]
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    job = Job(args.input, args.command, args.flag_seed, args.flag_file, weights,
              args.q_grid, args.format, args.method)
    code, report = run(job)
    out = report.render(job.format)
    if code == EXIT_OK:
        sys.stdout.write(out)
    else:
        # keep the partial report on stdout in structured mode, message on stderr always
        if job.format == "structured":
            sys.stdout.write(out)
        print(report.pairs[-1][1] if report.pairs else "error", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
