"""Command-line driver.

Exit status: 0 for a yes answer (or success), 1 for a no answer, 2 for any
error.  Records go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fileio
from .av2dp import solve_av2
from .control import AvInstance, PROBLEMS, validate, verify_witness
from .election import InputError, VoteMultiset
from .fpt import solve_av_fpt, solve_dv_fpt
from .generate import random_instance
from .intervals import build_2interval_rep, pad_to_point_segment_form, verify_rep
from .mrsp import brute_mrsp, solve_mrsp
from .oracles import CapacityError, brute
from .peaks import min_peak_cuts
from .reductions import brute_vis, graph_label, reduce_graph, reduce_vis_to_av2

YES, NO, ERROR = 0, 1, 2
REDUCTIONS = ("vis-to-av2", "vc3-to-dv2", "is3-to-av3", "is-to-dc3")
SOLVE_FIELDS = ("problem", "algorithm", "answer", "witness", "budget_used", "nodes", "milliseconds", "notes")


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json-lines":
        sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")
        return
    for key, val in record.items():
        if val is None:
            text = "-"
        elif isinstance(val, bool):
            text = "yes" if val else "no"
        elif isinstance(val, list) and all(isinstance(x, str) for x in val):
            text = "; ".join(val) if val else "(none)"
        elif isinstance(val, (list, dict)):
            text = json.dumps(val, separators=(",", ":"))
        else:
            text = str(val)
        sys.stdout.write(f"{key}: {text}\n")


def _answer(flag: bool) -> str:
    return "yes" if flag else "no"


def _ms(args, seconds: float):
    return round(seconds * 1000, 3) if args.timing else None


def _witness_text(inst, witness) -> list[str]:
    names = inst.election.candidates
    if witness is None:
        return []
    if isinstance(witness, VoteMultiset):
        return [f"{n}: {' > '.join(names[c] for c in v)}" for v, n in witness.entries]
    return [names[c] for c in sorted(witness)]


def _witness_size(witness) -> int | None:
    if witness is None:
        return None
    if isinstance(witness, VoteMultiset):
        return sum(n for _, n in witness.entries)
    return len(witness)


def _load_instance(args):
    ef = fileio.parse_election(_read(args.file))
    if args.r is not None:
        ef.r = args.r
    inst = fileio.to_instance(ef, problem=args.problem, budget=args.budget, k=args.k)
    return inst


def _pick_algo(args, inst) -> str:
    algo = args.algo
    if algo is None:
        if inst.problem == "av" and inst.k == 2:
            return "dp"
        return "fpt" if inst.problem in ("av", "dv") else "brute"
    if algo == "branch":
        raise CliError("--algo branch applies to the mrsp command only")
    if algo == "dp":
        if inst.problem != "av":
            raise CliError(f"--algo dp decides adding votes only, not {inst.problem}")
        if inst.k != 2:
            raise CliError(
                f"out of scope: --algo dp covers 2-peaked elections, got k={inst.k}; "
                "adding votes is NP-hard from k=3 on, use --algo fpt or brute"
            )
    if algo == "fpt" and inst.problem not in ("av", "dv"):
        raise CliError(f"--algo fpt decides av and dv only, not {inst.problem}")
    return algo


def cmd_solve(args, forced_algo: str | None = None) -> int:
    if forced_algo:
        args.algo = forced_algo
    if args.algo == "dp" and args.k is not None and args.k != 2:
        raise CliError(f"out of scope: --algo dp covers 2-peaked elections, got --k {args.k}")
    inst = _load_instance(args)
    algo = _pick_algo(args, inst)
    problems = validate(inst)
    if problems:
        raise CliError("invalid instance: " + "; ".join(problems))
    if algo == "dp":
        dec = solve_av2(inst, check=False)
    elif algo == "fpt":
        dec = solve_av_fpt(inst) if isinstance(inst, AvInstance) else solve_dv_fpt(inst)
    else:
        dec = brute(inst)
    if dec.answer and not verify_witness(inst, dec.witness):
        raise CliError("internal error: solver witness does not verify")
    record = dict.fromkeys(SOLVE_FIELDS)
    record.update(
        problem=inst.problem,
        algorithm=algo,
        answer=_answer(dec.answer),
        witness=_witness_text(inst, dec.witness) if dec.answer else None,
        budget_used=_witness_size(dec.witness) if dec.answer else None,
        nodes=dec.nodes,
        milliseconds=_ms(args, dec.elapsed),
        notes=list(dec.notes),
    )
    _emit(record, args.format)
    return YES if dec.answer else NO


def cmd_check(args) -> int:
    ef = fileio.parse_election(_read(args.file))
    names = ef.candidates
    axis = ef.axis if ef.axis is not None else names
    where = {c: i for i, c in enumerate(names)}
    k = args.k if args.k is not None else ef.k
    ax = []
    for c in axis:
        if c not in where:
            raise CliError(f"axis names unknown candidate {c!r}")
        ax.append(where[c])
    if sorted(ax) != list(range(len(names))):
        raise CliError("axis is not an ordering of the candidates")
    rows, worst = [], 0
    for section in ("registered", "unregistered"):
        for i, (n, vote) in enumerate(getattr(ef, section), start=1):
            ids = [where.get(c) for c in vote]
            if None in ids or sorted(ids) != list(range(len(names))):
                raise CliError(f"{section} vote #{i} is not a ranking of the candidates")
            cuts = min_peak_cuts(ids, ax)
            worst = max(worst, len(cuts) + 1)
            rows.append({"section": section, "index": i, "multiplicity": n,
                         "min_peaks": len(cuts) + 1, "cuts": cuts})
    ok = None if k is None else worst <= k
    record = {"k": k, "answer": None if ok is None else _answer(ok), "min_peaks": worst, "votes": rows}
    _emit(record, args.format)
    return NO if ok is False else YES


def cmd_reduce(args) -> int:
    text = _read(args.input)
    if args.kind == "vis-to-av2":
        vis = fileio.parse_vis(text)
        red = reduce_vis_to_av2(vis)
        label = brute_vis(vis) is not None
    else:
        if args.k is None:
            raise CliError(f"{args.kind} needs --k")
        g = fileio.parse_graph(text)
        red = reduce_graph(args.kind, g, args.k, args.r)
        label = graph_label(args.kind, g, args.k)
    out = fileio.write_election(red.instance)
    line = f"expected={_answer(label)}\n"
    if args.output:
        Path(args.output).write_text(out)
        Path(args.output + ".label").write_text(line)
    else:
        sys.stdout.write(out)
        sys.stderr.write(line)
    return YES


def cmd_gen(args) -> int:
    problem = args.problem or "av"
    k = args.k if args.k is not None else 2
    inst = random_instance(problem, args.m, args.r if args.r is not None else 3, k, args.votes,
                           args.budget if args.budget is not None else 2,
                           unregistered=args.unregistered, spoilers=args.spoilers, seed=args.seed)
    out = fileio.write_election(inst)
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return YES


def cmd_mrsp(args) -> int:
    inst = fileio.parse_mrsp(_read(args.file))
    algo = args.algo or "branch"
    if algo == "brute":
        res = brute_mrsp(inst)
    elif algo == "branch":
        res = solve_mrsp(inst)
    else:
        raise CliError(f"mrsp supports --algo branch or brute, not {algo}")
    wit = None
    if res.answer:
        wit = [" ".join(sorted(map(str, inst.sets[i]))) for i in res.witness]
    record = {
        "problem": "mrsp",
        "algorithm": algo,
        "answer": _answer(res.answer),
        "witness": wit,
        "nodes": res.nodes,
        "max_branch": res.max_branch,
        "max_depth": res.max_depth,
        "milliseconds": _ms(args, res.elapsed),
    }
    _emit(record, args.format)
    return YES if res.answer else NO


def cmd_interval(args) -> int:
    g = fileio.parse_graph(_read(args.file))
    rep = build_2interval_rep(g)
    if args.form == "padded":
        rep = pad_to_point_segment_form(rep, g)
    issues = verify_rep(g, rep, args.form)
    if issues:
        raise CliError("construction failed verification: " + "; ".join(issues[:3]))
    record = {"vertices": g.n, "form": args.form,
              "intervals": [[list(iv) for iv in ivs] for ivs in rep.intervals]}
    _emit(record, args.format)
    return YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", choices=PROBLEMS)
    common.add_argument("--algo", choices=("dp", "fpt", "brute", "branch"))
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--budget", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; solvers run on one thread")
    common.add_argument("--timing", action="store_true", help="report wall-clock milliseconds")

    ap = argparse.ArgumentParser(prog="kpeaked", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name, hlp in (("solve", "decide a control instance"), ("oracle", "decide by exhaustive search")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("file")
    p = sub.add_parser("check-kpeaked", parents=[common], help="minimum peak count of every vote")
    p.add_argument("file")
    p = sub.add_parser("reduce", parents=[common], help="build a hardness-reduction instance")
    p.add_argument("kind", choices=REDUCTIONS)
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p = sub.add_parser("gen", parents=[common], help="random k-peaked control instance")
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--votes", type=int, default=6)
    p.add_argument("--unregistered", type=int, default=4)
    p.add_argument("--spoilers", type=int, default=2)
    p.add_argument("-o", "--output")
    p = sub.add_parser("mrsp", parents=[common], help="decide a set packing instance")
    p.add_argument("file")
    p = sub.add_parser("interval-rep", parents=[common], help="2-interval representation of a graph")
    p.add_argument("file")
    p.add_argument("--form", choices=("padded", "raw"), default="padded")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    if args.threads < 1:
        sys.stderr.write("kpeaked: --threads must be at least 1\n")
        return ERROR
    handlers = {
        "solve": cmd_solve,
        "oracle": lambda a: cmd_solve(a, "brute"),
        "check-kpeaked": cmd_check,
        "reduce": cmd_reduce,
        "gen": cmd_gen,
        "mrsp": cmd_mrsp,
        "interval-rep": cmd_interval,
    }
    try:
        return handlers[args.command](args)
    except (CliError, InputError, CapacityError) as exc:
        sys.stderr.write(f"kpeaked: {exc}\n")
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
