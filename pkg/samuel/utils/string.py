def validate_variable_name(expr: str) -> bool:
    """Check if `expr` is a valid ring variable name: it has to be a valid
    python identifier, it can't be purely `_`, and it can't shadow the
    ring file keywords

    :param expr: variable name expression
    :return: whether it is valid
    """
    if not isinstance(expr, str) or not expr.isidentifier():
        return False
    return expr.strip("_") != "" and expr not in RESERVED_NAMES


def assert_variable_name(expr: str) -> str:
    """Check if `expr` is a valid ring variable name, see
    :func:`~.validate_variable_name`

    :param expr: variable name expression
    :raises AssertionError: if the expression is invalid
    :return: the expression string
    """
    assert validate_variable_name(expr), f"{expr} is not a valid variable name"
    return expr


RESERVED_NAMES = frozenset(["field", "vars", "relations", "ideal", "expect"])
