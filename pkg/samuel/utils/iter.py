from typing import Any, Callable, Dict, Iterable, List, Tuple, TypeVar

from samuel.utils.assertion import assert_or_throw

T = TypeVar("T")


def to_kv_iterable(data: Any, none_as_empty: bool = True) -> Iterable[Tuple[Any, Any]]:
    """Convert data to iterable of key value pairs

    :param data: input object, it can be a dict or Iterable[Tuple[Any, Any]]
        or Iterable[List[Any]]
    :param none_as_empty: if to treat None as empty iterable

    :raises ValueError: if input is None and `none_as_empty==False`
    :raises TypeError: if input data type is not acceptable

    :yield: iterable of key value pair as tuples
    """
    if data is None:
        assert_or_throw(none_as_empty, ValueError("data can't be None"))
    elif isinstance(data, Dict):
        yield from data.items()
    elif isinstance(data, Iterable):
        for item in data:
            if isinstance(item, (tuple, List)) and len(item) == 2:
                yield item[0], item[1]
            else:
                raise TypeError(f"{item} is not an acceptable item")
    else:
        raise TypeError(f"{type(data)} is not supported")


def take_blocks(lines: Iterable[T], is_header: Callable[[T], bool]) -> List[List[T]]:
    """Cut ``lines`` into blocks, each starting at a line where ``is_header``
    is true. Lines before the first header form their own block. The corpus
    reader uses it to cut a file into instance blocks

    :param lines: input lines
    :param is_header: predicate marking the first line of a block
    :return: list of non-empty blocks

    :Examples:
    >>> take_blocks(["a", "# b", "c"], lambda s: s.startswith("#"))
    [['a'], ['# b', 'c']]
    """
    blocks: List[List[T]] = []
    for item in lines:
        if len(blocks) == 0 or is_header(item):
            blocks.append([])
        blocks[-1].append(item)
    return blocks
