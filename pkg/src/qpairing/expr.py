"""Parse polynomial expressions such as ``"xi^4 - 3*xi*zeta2 + 1/2"``.

Grammar: integer literals, generator names, ``+``, ``-``, ``*``, ``^`` (or
``**``) with a non-negative integer exponent, parentheses, and ``/`` between
constants only.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .exactalg import MultiPoly


def parse_expression(text: str, generators: Sequence[str]) -> MultiPoly:
    names = list(generators)
    n = len(names)
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValidationError(f"cannot parse expression {text!r}: {exc.msg}") from exc

    def const(node) -> Fraction | None:
        p = walk(node)
        return p.constant_term().re if p.is_constant() and p.constant_term().is_real else None

    def walk(node) -> MultiPoly:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return MultiPoly.constant(n, node.value)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValidationError(f"unknown generator {node.id!r}; expected one of {names}")
            return MultiPoly.variable(n, names.index(node.id))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return -inner if isinstance(node.op, ast.USub) else inner
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return walk(node.left) + walk(node.right)
            if isinstance(node.op, ast.Sub):
                return walk(node.left) - walk(node.right)
            if isinstance(node.op, ast.Mult):
                return walk(node.left) * walk(node.right)
            if isinstance(node.op, ast.Pow):
                e = const(node.right)
                if e is None or e.denominator != 1 or e < 0:
                    raise ValidationError("exponents must be non-negative integer constants")
                return walk(node.left) ** int(e)
            if isinstance(node.op, ast.Div):
                num, den = const(node.left), const(node.right)
                if num is None or den is None:
                    raise ValidationError("division is only allowed between constants")
                if den == 0:
                    raise ValidationError("division by zero")
                return MultiPoly.constant(n, num / den)
        raise ValidationError(f"unsupported syntax in expression {text!r}")

    return walk(tree)
