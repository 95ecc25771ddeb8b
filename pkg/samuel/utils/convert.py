from typing import Any, Tuple


def to_bool(obj: Any) -> bool:
    """Convert an object to python bool value. It can handle values
    like `True`, `true`, `yes`, `1`, etc

    :param obj: object
    :raises TypeError: if failed to convert
    :return: bool value
    """
    if obj is None:
        raise TypeError("None can't convert to bool")
    o = str(obj).lower()
    if o in ["true", "yes", "1"]:
        return True
    if o in ["false", "no", "0"]:
        return False
    raise TypeError(f"{o} can't convert to bool")


def to_int_tuple(obj: Any) -> Tuple[int, ...]:
    """Convert an object to a tuple of integers. Strings are split on commas
    (``"1,2,3"``), iterables are converted item by item

    :param obj: object
    :raises TypeError: if failed to convert
    :return: tuple of ints
    """
    if obj is None:
        raise TypeError("None can't convert to int tuple")
    if isinstance(obj, int) and not isinstance(obj, bool):
        return (obj,)
    try:
        if isinstance(obj, str):
            parts = [p.strip() for p in obj.split(",")]
            return tuple(int(p) for p in parts if p != "")
        return tuple(_to_exact_int(x) for x in obj)
    except (ValueError, TypeError) as e:
        raise TypeError(f"{obj} can't convert to int tuple", e)


def as_type(obj: Any, target: type) -> Any:
    """Convert `obj` into `target` type

    :param obj: input object
    :param target: target type

    :return: object in the target type
    """
    if issubclass(type(obj), target):
        return obj
    if target == bool:
        return to_bool(obj)
    if target == tuple:
        return to_int_tuple(obj)
    return target(obj)


def _to_exact_int(x: Any) -> int:
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise TypeError(f"{x} is not an integer")
