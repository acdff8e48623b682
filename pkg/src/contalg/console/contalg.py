# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Content algebra and zero-divisor graph workbench for finite commutative rings.

.. highlight:: none

Rings are written as expressions:

    Zn                              integers mod n, e.g. Z6
    Zn[y]/(f)                       quotient by a monic polynomial, e.g. Z2[y]/(y^2+y+1)
    Zn[u,v]@m[/(monomials)]         truncated polynomials, monomials of degree m and up are 0
    A x B                           direct product, e.g. "Z2 x Z4"

Commands
    analyze         Describe the structure of a ring.
    graph           Build the zero-divisor graph of a ring or of its polynomials.
    verify          Verify theorems on a ring or on the fixture rings.
    dm              Find the Dedekind-Mertens exponent of two polynomials.
    monoid-demo     Build fg = 0 with unit contents over a monoid with a defect.

Use contalg <command> --help for the parameters of a command.  The environment variable
CONTALG_CAP overrides the default order and vertex caps, the --cap parameter wins over it.

**Return Value**

    0   success or everything verified
    1   a check was refuted
    2   invalid input: parse error or bad parameter
    3   a cap was reached or a check was inconclusive

**Example**

.. code-block:: python

   contalg analyze Z6
   contalg graph Z6 --dot z6.dot
   contalg verify all Z4 --json z4.json
   contalg dm Z4 "2*X + 1" "2*X + 2"
   contalg monoid-demo torsion --ring Z3 --order 2
"""
import argparse

from contalg.console import analyze, dm, graph, monoid_demo, verify

COMMANDS = {
    "analyze": (analyze, analyze.analyze),
    "graph": (graph, graph.graph),
    "verify": (verify, verify.verify),
    "dm": (dm, dm.dm),
    "monoid-demo": (monoid_demo, monoid_demo.monoid_demo),
}


def _parse_arguments(argv: list[str] = None) -> dict:
    """Parse input arguments from command line."""
    parser = argparse.ArgumentParser(
        prog="contalg",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for module, _ in COMMANDS.values():
        module.add_parser(subparsers)
    return vars(parser.parse_args(argv))


def main(argv: list[str] = None) -> None:
    """Allow command line operation with unique arguments.

    Args:
        argv: Optional argument list, default is sys.argv.
    """
    args = _parse_arguments(argv)
    _, command = COMMANDS[args.pop("command")]
    command(**args)


if __name__ == "__main__":
    main()
