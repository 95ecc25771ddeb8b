from threading import RLock
from typing import Any, Callable, Dict, Hashable, Optional, Tuple


class RunOnce(object):
    """Run `func` once per key, the key is computed by `key_func` from the
    call arguments. Gröbner bases of ideal handles and the powers of quotient
    ideals are cached through this class, so concurrent evaluation of a
    Hilbert table computes every basis exactly once.

    :param func: the function to run only once per key
    :param key_func: the unique key determined by arguments of `func`, if None
        the positional arguments themselves are the key
    :param lock_type: lock class type for thread safe

    :Examples:
    >>> r = RunOnce(lambda n: n * n)
    >>> assert 4 == r(2)  # computes
    >>> assert 4 == r(2)  # cached

    :Notice:
    * For concurrent calls with the same key, only one will trigger `func`,
      other calls block until the first call returns
    * Exceptions are not cached, the next call with the same key retries
    * This class is cloudpicklable, but an unpickled instance starts with an
      empty cache
    """

    def __init__(
        self,
        func: Callable,
        key_func: Optional[Callable[..., Hashable]] = None,
        lock_type: type = RLock,
    ):
        self._func = func
        self._key_func = key_func
        self._lock_type = lock_type
        self._init_locks()

    def __getstate__(self) -> Dict[str, Any]:
        d = dict(self.__dict__)
        del d["_lock"]
        del d["_locks"]
        del d["_store"]
        return d

    def __setstate__(self, members: Any) -> None:
        self.__dict__.update(members)
        self._init_locks()

    def __call__(self, *args: Any, **kwargs: Any) -> Any:
        key = self._key(*args, **kwargs)
        lock = self._get_lock(key)
        with lock:
            found, res = self._try_get(key)
            if found:
                return res
            res = self._func(*args, **kwargs)
            self._update(key, res)
            return res

    def is_cached(self, *args: Any, **kwargs: Any) -> bool:
        """Whether the value for these arguments has been computed

        :return: True if a later call returns without running `func`
        """
        return self._try_get(self._key(*args, **kwargs))[0]

    def _key(self, *args: Any, **kwargs: Any) -> Hashable:
        if self._key_func is None:
            return args
        return self._key_func(*args, **kwargs)

    def _get_lock(self, key: Hashable) -> Any:
        with self._lock:
            if key not in self._locks:
                self._locks[key] = self._lock_type()
            return self._locks[key]

    def _try_get(self, key: Hashable) -> Tuple[bool, Any]:
        with self._lock:
            if key in self._store:
                return True, self._store[key]
            return False, None

    def _update(self, key: Hashable, value: Any) -> None:
        with self._lock:
            self._store[key] = value

    def _init_locks(self) -> None:
        self._lock = self._lock_type()
        self._locks: Dict[Hashable, Any] = {}
        self._store: Dict[Hashable, Any] = {}
