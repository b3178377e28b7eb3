"""Command-line front end: ``ribbonalg <group> <command> [--input F] [--output F] [--pretty]``.

Reads one JSON document, validates it against the command's schema, runs the
operation and prints the JSON result.  Exit codes: 0 success, 2 parse or
schema error, 3 mathematical precondition violated, 4 internal invariant
violated.  Errors are reported on stderr as ``{"error": {...}}``.
"""

import argparse
import json
import sys

import jsonschema

from . import aut as A
from . import bundles as B
from . import cech as C
from . import der as D
from . import serialize as S
from .errors import InputError, InvariantViolation, PreconditionError

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4

# -- schemas -----------------------------------------------------------------------

_RF = {"type": "string"}
_ORDER = {"type": "integer", "minimum": 0}
_DEFS = {
    "ratfunc": _RF,
    "jet": {"type": "object", "required": ["n", "coeffs"], "additionalProperties": False,
            "properties": {"n": _ORDER, "coeffs": {"type": "array", "items": _RF}}},
    "aut": {"type": "object", "required": ["n", "mu", "nu"], "additionalProperties": False,
            "properties": {"n": {"type": "integer", "minimum": 2},
                           "mu": {"$ref": "#/$defs/jet"}, "nu": {"$ref": "#/$defs/jet"}}},
    "der": {"type": "object", "required": ["n", "a", "b"], "additionalProperties": False,
            "properties": {"n": {"type": "integer", "minimum": 2},
                           "a": {"$ref": "#/$defs/jet"}, "b": {"$ref": "#/$defs/jet"}}},
    "cover": {"type": "object", "required": ["opens"], "additionalProperties": False,
              "properties": {"opens": {"type": "object", "minProperties": 1,
                                       "additionalProperties": {"type": "array",
                                                                "items": {"type": "string"}}}}},
    "cocycle": {"type": "object", "required": ["n", "cover", "entries"],
                "additionalProperties": False,
                "properties": {"n": {"type": "integer", "minimum": 2},
                               "cover": {"$ref": "#/$defs/cover"},
                               "entries": {"type": "object",
                                           "additionalProperties": {"$ref": "#/$defs/aut"}}}},
    "line": {"type": "object", "required": ["cover", "entries"], "additionalProperties": False,
             "properties": {"cover": {"$ref": "#/$defs/cover"},
                            "entries": {"type": "object", "additionalProperties": _RF}}},
    "cochain": {"type": "object", "required": ["cover", "entries"], "additionalProperties": False,
                "properties": {"n": {"type": "integer", "minimum": 2},
                               "cover": {"$ref": "#/$defs/cover"},
                               "entries": {"type": "object",
                                           "additionalProperties": {"$ref": "#/$defs/aut"}}}},
    "kernel": {"type": "object", "required": ["n", "entries"], "additionalProperties": False,
               "properties": {"n": {"type": "integer", "minimum": 3},
                              "cover": {"$ref": "#/$defs/cover"},
                              "entries": {"type": "object", "additionalProperties": {
                                  "type": "object", "required": ["theta", "beta"],
                                  "additionalProperties": False,
                                  "properties": {"theta": _RF, "beta": _RF}}}}},
}


def _obj(**props):
    return {"type": "object", "required": list(props), "additionalProperties": False,
            "properties": {k: ({"$ref": f"#/$defs/{v}"} if isinstance(v, str) else v)
                           for k, v in props.items()}}


_POS = {"type": "integer", "minimum": 1}

# -- commands ----------------------------------------------------------------------

_COMMANDS = {}


def command(group, name, schema):
    def register(fn):
        full = {**schema, "$defs": _DEFS}
        jsonschema.Draft202012Validator.check_schema(full)
        _COMMANDS[(group, name)] = (fn, jsonschema.Draft202012Validator(full))
        return fn
    return register


@command("aut", "apply", _obj(aut="aut", jet="jet"))
def _aut_apply(doc):
    return A.aut_apply(S.aut_from_json(doc["aut"], "/aut"), S.jet_from_json(doc["jet"], "/jet"))


@command("aut", "compose", _obj(f="aut", g="aut"))
def _aut_compose(doc):
    return A.aut_compose(S.aut_from_json(doc["f"], "/f"), S.aut_from_json(doc["g"], "/g"))


@command("aut", "invert", _obj(aut="aut"))
def _aut_invert(doc):
    return A.aut_invert(S.aut_from_json(doc["aut"], "/aut"))


@command("aut", "rho", _obj(aut="aut"))
def _aut_rho(doc):
    return A.aut_rho(S.aut_from_json(doc["aut"], "/aut"))


@command("aut", "xi", _obj(aut="aut"))
def _aut_xi(doc):
    return A.aut_xi(S.aut_from_json(doc["aut"], "/aut"))


@command("aut", "exp", _obj(der="der"))
def _aut_exp(doc):
    return D.der_exp(S.der_from_json(doc["der"], "/der"))


@command("aut", "log", _obj(aut="aut"))
def _aut_log(doc):
    return D.der_log(S.aut_from_json(doc["aut"], "/aut"))


@command("aut", "star", _obj(left="der", right="der"))
def _aut_star(doc):
    return D.der_star(S.der_from_json(doc["left"], "/left"), S.der_from_json(doc["right"], "/right"))


@command("cocycle", "verify", _obj(cocycle="cocycle"))
def _cocycle_verify(doc):
    return C.cocycle_verify(S.cocycle_from_json(doc["cocycle"], "/cocycle"))


@command("cocycle", "twist", _obj(cocycle="cocycle", cochain="cochain"))
def _cocycle_twist(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    h = S.cochain_from_json(doc["cochain"], "/cochain", n=g.n)
    return C.cocycle_twist(g, h)


@command("cocycle", "trivial", _obj(line="line", n={"type": "integer", "minimum": 2}))
def _cocycle_trivial(doc):
    return C.trivial_cocycle(S.line_from_json(doc["line"], "/line"), doc["n"])


@command("cocycle", "xi", _obj(cocycle="cocycle"))
def _cocycle_xi(doc):
    return C.cocycle_xi(S.cocycle_from_json(doc["cocycle"], "/cocycle"))


@command("cocycle", "rho", _obj(cocycle="cocycle"))
def _cocycle_rho(doc):
    return C.cocycle_rho(S.cocycle_from_json(doc["cocycle"], "/cocycle"))


@command("cocycle", "lift", _obj(cocycle="cocycle", kernel="kernel"))
def _cocycle_lift(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    u = S.kernel_from_json(doc["kernel"], "/kernel", cover=g.cover)
    lifted = C.cocycle_lift(g, u)
    return {"cocycle": lifted, "report": C.cocycle_verify(lifted)}


@command("cocycle", "obstruction", _obj(cocycle="cocycle"))
def _cocycle_obstruction(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    return {"entries": {"|".join(t): {"gamma": gamma, "theta": th, "beta": be}
                        for t, (gamma, th, be) in C.obstruction(g).items()}}


@command("cocycle", "blowup", _obj(cocycle="cocycle", open={"type": "string"},
                                   point={"type": "string"}, q=_POS, mu="jet", nu="jet"))
def _cocycle_blowup(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    (point,) = S._points([doc["point"]], "/point")
    return C.blowup(g, doc["open"], point, doc["q"], S.jet_from_json(doc["mu"], "/mu"),
                    S.jet_from_json(doc["nu"], "/nu"))


@command("bundle", "e2", _obj(cocycle="cocycle", n={"type": "integer", "minimum": 3}))
def _bundle_e2(doc):
    return B.e2_matrix_cocycle(S.cocycle_from_json(doc["cocycle"], "/cocycle"), doc["n"])


@command("bundle", "delta", _obj(aut="aut"))
def _bundle_delta(doc):
    return B.delta_matrix(S.aut_from_json(doc["aut"], "/aut"))


@command("bundle", "tangent", _obj(aut="aut"))
def _bundle_tangent(doc):
    return B.tangent_restricted_matrix(S.aut_from_json(doc["aut"], "/aut"))


@command("bundle", "prolcheck", _obj(cocycle="cocycle", kernel="kernel"))
def _bundle_prolcheck(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    return B.prol_check(g, S.kernel_from_json(doc["kernel"], "/kernel", cover=g.cover))


@command("kernel", "conjugate", _obj(aut="aut", theta="ratfunc", beta="ratfunc"))
def _kernel_conjugate(doc):
    phi = S.aut_from_json(doc["aut"], "/aut")
    th, be = C.kernel_conjugate(phi, S.ratfunc_from_json(doc["theta"], "/theta"),
                                S.ratfunc_from_json(doc["beta"], "/beta"))
    return {"theta": th, "beta": be}


@command("kernel", "action", _obj(cochain="cochain", cocycle="cocycle", kernel="kernel"))
def _kernel_action(doc):
    g = S.cocycle_from_json(doc["cocycle"], "/cocycle")
    psi = S.cochain_from_json(doc["cochain"], "/cochain", n=g.n)
    u = S.kernel_from_json(doc["kernel"], "/kernel", cover=g.cover)
    return C.h1_action(psi, g, u)


@command("split", "law", _obj(left="jet", right="jet"))
def _split_law(doc):
    return C.split_law(S.jet_from_json(doc["left"], "/left"), S.jet_from_json(doc["right"], "/right"))


# -- driver ------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="ribbonalg", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)
    by_group = {}
    for group, name in _COMMANDS:
        by_group.setdefault(group, []).append(name)
    for group, names in by_group.items():
        gp = groups.add_parser(group).add_subparsers(dest="command", required=True)
        for name in names:
            sp = gp.add_parser(name)
            sp.add_argument("--input", help="JSON input file (default: stdin)")
            sp.add_argument("--output", help="output file (default: stdout)")
            sp.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return parser


def _emit_error(code, message, location, stream):
    json.dump({"error": {"code": code, "message": message, "location": location}},
              stream, sort_keys=True)
    stream.write("\n")


def _schema_location(err):
    return {"path": "".join(f"/{p}" for p in err.absolute_path)}


def run(group, name, text):
    """Run one command on a JSON text; returns the encoded result."""
    fn, validator = _COMMANDS[(group, name)]
    doc = json.loads(text)
    error = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if error is not None:
        raise error
    return S.to_json(fn(doc))


def dispatch(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = stdin.read()
    except OSError as exc:
        _emit_error("io-error", str(exc), {"file": args.input}, stderr)
        return EXIT_INPUT
    try:
        result = run(args.group, args.command, text)
    except json.JSONDecodeError as exc:
        _emit_error("json-syntax-error", exc.msg,
                    {"offset": exc.pos, "line": exc.lineno, "column": exc.colno}, stderr)
        return EXIT_INPUT
    except jsonschema.ValidationError as exc:
        _emit_error("schema-error", exc.message, _schema_location(exc), stderr)
        return EXIT_INPUT
    except InputError as exc:
        _emit_error(exc.code, str(exc), exc.location, stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        _emit_error(exc.code, str(exc), exc.location, stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        _emit_error(exc.code, str(exc), exc.location, stderr)
        return EXIT_INTERNAL
    except RecursionError as exc:
        _emit_error("input-too-deep", str(exc), None, stderr)
        return EXIT_INPUT
    except Exception as exc:  # a defect, but still report it as JSON
        _emit_error("internal-error", f"{type(exc).__name__}: {exc}", None, stderr)
        return EXIT_INTERNAL
    out = json.dumps(result, sort_keys=True, indent=2 if args.pretty else None,
                     separators=None if args.pretty else (",", ":"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        stdout.write(out + "\n")
    return EXIT_OK


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
