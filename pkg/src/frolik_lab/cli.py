"""Command-line front end.

    frolik-lab verify {swpc,fq,prop,easy,cardinality-example} [options]
    frolik-lab spectrum [SEQUENCE.json] [--pseudo]
    frolik-lab enumerate topologies -n N
    frolik-lab product A B

Reports go to stdout as JSON (unless ``--quiet``) and to ``--json PATH``.
The exit status is 0 when there are no discrepancies, 1 when a
verification found some, and 2 on bad input or an exceeded cap.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .bits import to_mask
from .caps import Caps
from .convergence import pspectrum, spectrum
from .errors import ParseError, SizeCapExceeded
from .jsonio import (
    dumps,
    family_to_json,
    loads,
    sequence_from_json,
    space_from_json,
    space_to_json,
)
from .topology import enumerate_topologies, product
from .verification import (
    EasyScope,
    Scope,
    verify_cardinality_example,
    verify_easy,
    verify_fq,
    verify_prop_pseudo,
    verify_swpc,
)

THEOREMS = ("swpc", "fq", "prop", "easy", "cardinality-example")


@dataclass
class RunConfig:
    command: str
    target: str = None
    inputs: list = field(default_factory=list)
    max_points: int = 3
    max_index: int = 2
    seed: int = 0
    samples: int = 1000
    workers: int = 1
    caps: Caps = field(default_factory=Caps)
    output_path: str = None
    quiet: bool = False
    pseudo: bool = False
    n: int = None

    def __post_init__(self):
        if self.samples < 0:
            raise ValueError("samples must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit natural number")


def _read_input(path):
    if path in (None, "-"):
        return loads(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read input ({exc.strerror})", path) from exc
    return loads(text, path)


def _space_arg(arg):
    """A space name such as ``discrete:2``, or a path to space JSON."""
    if ":" in arg or arg == "sierpinski":
        if not Path(arg).exists():
            return space_from_json(arg)
    return space_from_json(_read_input(arg), arg)


def _verify(config):
    if config.target == "cardinality-example":
        return verify_cardinality_example()
    if config.target == "easy":
        return verify_easy(EasyScope(seed=config.seed, samples=config.samples), config.workers)
    scope = Scope(
        max_points=config.max_points,
        index_size=config.max_index,
        fq_index_sizes=tuple(range(1, config.max_index + 1)),
        seed=config.seed,
        samples=config.samples,
        random_index_sizes=tuple(range(1, config.max_index + 1)),
        caps=config.caps,
    )
    fn = {"swpc": verify_swpc, "fq": verify_fq, "prop": verify_prop_pseudo}[config.target]
    return fn(scope, config.workers)


def run(config):
    """Execute ``config``; returns ``(exit_status, report_dict)``."""
    caps = config.caps
    if config.command == "verify":
        report = _verify(config)
        out = report.to_json()
        status = 0 if report.ok else 1
    elif config.command == "spectrum":
        obj = _read_input(config.inputs[0] if config.inputs else None)
        if config.pseudo:
            X = space_from_json(obj.get("space") if isinstance(obj, dict) else None,
                                "sequence.space")
            values = obj.get("values")
            if not isinstance(values, list) or not values:
                raise ParseError("expected a nonempty list of open sets", "sequence.values")
            os = []
            for j, v in enumerate(values):
                if not isinstance(v, list) or not all(isinstance(p, int) for p in v):
                    raise ParseError("expected a list of points", f"sequence.values[{j}]")
                m = to_mask(v)
                if m == 0 or not X.is_open(m):
                    raise ParseError("not a nonempty open set", f"sequence.values[{j}]")
                os.append(m)
            fam = pspectrum(X, os, caps)
        else:
            X, values = sequence_from_json(obj)
            fam = spectrum(X, values, caps)
        out = {"pseudo": config.pseudo, "spectrum": family_to_json(fam)}
        status = 0
    elif config.command == "enumerate":
        spaces = [space_to_json(X) for X in enumerate_topologies(config.n, caps)]
        out = {"points": config.n, "count": len(spaces), "spaces": spaces}
        status = 0
    elif config.command == "product":
        X, Y = (_space_arg(a) for a in config.inputs)
        out = space_to_json(product(X, Y, caps))
        status = 0
    else:
        raise ValueError(f"unknown command {config.command!r}")
    out = {**out, "tool": "frolik-lab", "tool_version": __version__, "seed": config.seed,
           "caps": caps.as_dict()}
    return status, out


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-points", type=int, default=3)
    common.add_argument("--max-index", type=int, default=2)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cap-product-points", type=int, default=Caps.product_points)
    common.add_argument("--json", dest="output_path", metavar="PATH")
    common.add_argument("--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="frolik-lab", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    v.add_argument("target", choices=THEOREMS)
    s = sub.add_parser("spectrum", parents=[common], help="spectrum of a sequence")
    s.add_argument("inputs", nargs="*", metavar="SEQUENCE")
    s.add_argument("--pseudo", action="store_true", help="values are open sets")
    e = sub.add_parser("enumerate", parents=[common], help="list topologies")
    e.add_argument("target", choices=("topologies",))
    e.add_argument("-n", type=int, required=True)
    pr = sub.add_parser("product", parents=[common], help="product of two spaces")
    pr.add_argument("inputs", nargs=2, metavar="SPACE")
    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        caps = Caps(product_points=args.cap_product_points)
        config = RunConfig(
            command=args.command,
            target=getattr(args, "target", None),
            inputs=getattr(args, "inputs", []),
            max_points=args.max_points,
            max_index=args.max_index,
            seed=args.seed,
            samples=args.samples,
            workers=args.workers,
            caps=caps,
            output_path=args.output_path,
            quiet=args.quiet,
            pseudo=getattr(args, "pseudo", False),
            n=getattr(args, "n", None),
        )
        status, report = run(config)
    except (ParseError, SizeCapExceeded, ValueError) as exc:
        print(f"frolik-lab: error: {exc}", file=sys.stderr)
        return 2
    text = dumps(report)
    if config.output_path:
        Path(config.output_path).write_text(text)
    if not config.quiet:
        sys.stdout.write(text)
    return status



