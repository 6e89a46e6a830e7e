"""
Argument parser of the `homnambu` command. Unset flags stay None so that
values from configuration files survive the merge.
"""
import argparse
import sys

from homnambu.config import FORMATS
from homnambu.version import __version__

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# flags whose values may start with "-", e.g. --range -2..2 or --z -2i
SIGNED_VALUE_FLAGS = ("--z", "--q", "--range", "--k", "--k4", "--theta",
                      "--gamma")


def join_signed_values(argv):
    """
    Rewrite `--flag -value` into `--flag=-value` for the flags in
    `SIGNED_VALUE_FLAGS`, which argparse would otherwise read as a missing
    value followed by an unknown option.
    """
    joined = []
    argv = list(argv)
    position = 0
    while position < len(argv):
        token = argv[position]
        following = argv[position + 1] if position + 1 < len(argv) else None
        if token in SIGNED_VALUE_FLAGS and following is not None and \
                following.startswith("-") and not following.startswith("--"):
            joined.append(f"{token}={following}")
            position += 2
        else:
            joined.append(token)
            position += 1
    return joined


class ArgumentParser(argparse.ArgumentParser):
    def parse_known_args(self, args=None, namespace=None):
        if args is None:
            args = sys.argv[1:]
        return super().parse_known_args(join_signed_values(args), namespace)


def _add_common(parser):
    parser.add_argument("--config", metavar="FILE",
                        help="YAML or JSON run configuration; flags override "
                             "its values")
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="report format (default: text)")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING",
                        help="logging level (default: WARNING)")


def _add_model_params(parser):
    parser.add_argument("--z", help="Virasoro-Witt constant, e.g. 2i, -2i, "
                                    "1")
    parser.add_argument("--theta", help="rotation angles: symbolic, "
                                        "series:N or exact:c1,s1,c2,s2")
    parser.add_argument("--gamma", help="unimodular substitution, e.g. "
                                        "k1=1,k2=1,k3=1,k4=2,p1=x2^2,p2=x3")
    parser.add_argument("--q", help="scaling parameter: a scalar, laurent "
                                    "or series:N")
    parser.add_argument("--range", dest="range", metavar="A..B",
                        help="generator index range, e.g. -2..2; range r "
                             "gives (2(2r+1))^5 tuples")
    parser.add_argument("--degree", type=int,
                        help="monomial degree bound (jacobian3 samples, "
                             "p1/p2 shape of the jacobian family)")


def build_parser():
    parser = ArgumentParser(
        prog="homnambu",
        description="Exact checks of ternary hom-Nambu(-Lie) algebras and "
                    "their formal deformations")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    verify = commands.add_parser(
        "verify", help="check skew-symmetry, the hom-Nambu identity and "
                       "multiplicativity of a model")
    verify.add_argument("model", nargs="?", help="model id, see list-models")
    _add_model_params(verify)
    verify.add_argument("--plain-nambu", dest="plain_nambu",
                        action="store_true", default=None,
                        help="check the untwisted Nambu identity of the "
                             "(twisted) bracket")
    _add_common(verify)

    counterexample = commands.add_parser(
        "counterexample", help="reproduce a failure of the untwisted "
                               "identity")
    counterexample.add_argument("name", nargs="?",
                                help="cross4-theta or jacobian-k4")
    counterexample.add_argument("--k4", help="bind k4 (jacobian-k4); "
                                             "symbolic when omitted")
    _add_common(counterexample)

    deform = commands.add_parser(
        "deform", help="build a formal deformation and verify it order by "
                       "order")
    deform.add_argument("model", nargs="?", help="family id: qvw, cross4 or "
                                                 "jacobian")
    deform.add_argument("--order", type=int, help="truncation order N")
    _add_model_params(deform)
    deform.add_argument("--allow-any-z", dest="allow_any_z",
                        action="store_true", default=None,
                        help="build qvw over a z that is not 2i or -2i")
    deform.add_argument("--k", metavar="K1,K2,K3",
                        help="fixed diagonal of the jacobian family, "
                             "k1*k2*k3 = 1 (default: 1,1,1)")
    deform.add_argument("--save", metavar="FILE",
                        help="write the family components to FILE (.hnd)")
    _add_common(deform)

    list_models = commands.add_parser(
        "list-models", help="list models, families and their parameters")
    _add_common(list_models)
    return parser


def args_to_config(args):
    """
    The run configuration carried by parsed flags, None where unset.
    """
    values = vars(args)
    return {
        "command": values.get("command"),
        "model": values.get("model"),
        "name": values.get("name"),
        "params": {key: values.get(key)
                   for key in ("z", "theta", "gamma", "q", "k", "k4",
                               "allow_any_z")},
        "sample": {"range": values.get("range"),
                   "degree": values.get("degree")},
        "order": values.get("order"),
        "format": values.get("format"),
        "plain_nambu": values.get("plain_nambu"),
        "save": values.get("save"),
    }
