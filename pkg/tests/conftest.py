import io
import sys

import pytest

from tropfan import cli

HANKEL_INPUT = """Q[a,b,c,d,e,f,g]
{-c^3+2*b*c*d-a*d^2-b^2*e+a*c*e,-c^2*d+b*d^2+b*c*e-a*d*e-b^2*f+a*c*f,
-c*d^2+c^2*e+b*d*e-a*e^2-b*c*f+a*d*f,-d^3+2*c*d*e-b*e^2-c^2*f+b*d*f,
-c^2*d+b*d^2+b*c*e-a*d*e-b^2*f+a*c*f,-c*d^2+2*b*d*e-a*e^2-b^2*g+a*c*g,
-d^3+c*d*e+b*d*f-a*e*f-b*c*g+a*d*g,-d^2*e+c*e^2+c*d*f-b*e*f-c^2*g+b*d*g,
-c*d^2+c^2*e+b*d*e-a*e^2-b*c*f+a*d*f,-d^3+c*d*e+b*d*f-a*e*f-b*c*g+a*d*g,
-d^2*e+2*c*d*f-a*f^2-c^2*g+a*e*g,-d*e^2+d^2*f+c*e*f-b*f^2-c*d*g+b*e*g,
-d^3+2*c*d*e-b*e^2-c^2*f+b*d*f,-d^2*e+c*e^2+c*d*f-b*e*f-c^2*g+b*d*g,
-d*e^2+d^2*f+c*e*f-b*f^2-c*d*g+b*e*g,-e^3+2*d*e*f-c*f^2-d^2*g+c*e*g}
{(6,5,4,3,2,1,0)}
"""


@pytest.fixture
def hankel_input():
    return HANKEL_INPUT


def run_cli(argv, stdin_text):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    old_in, old_out, old_err = sys.stdin, sys.stdout, sys.stderr
    sys.stdin = io.StringIO(stdin_text)
    sys.stdout = io.StringIO()
    sys.stderr = io.StringIO()
    try:
        code = cli.main(argv)
        return code, sys.stdout.getvalue(), sys.stderr.getvalue()
    finally:
        sys.stdin, sys.stdout, sys.stderr = old_in, old_out, old_err


@pytest.fixture
def cli_runner():
    return run_cli
