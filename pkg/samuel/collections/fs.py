import os
from threading import RLock
from typing import Dict, Tuple
from urllib.parse import urlparse

import fs.path
from fs import memoryfs, open_fs, tempfs
from fs.base import FS as FSBase
from fs.mountfs import MountFS

from samuel.utils.hash import to_uuid


class FileSystem(MountFS):
    """A unified filesystem based on PyFileSystem2, ring files, corpus files
    and JSON reports are read and written through it. All paths must be absolute,
    either local (``/a/b.ring``) or with a scheme (``mem://data/b.ring``).
    Override `create_fs` to provide other configured file systems.

    :Examples:
    >>> fs = FileSystem()
    >>> fs.write_text("mem://rings/r.ring", "vars x y")
    >>> assert "vars x y" == fs.read_text("mem://rings/r.ring")

    :param auto_close: If `True` (the default), the child filesystems
      will be closed when `MountFS` is closed.
    """

    def __init__(self, auto_close: bool = True):
        super().__init__(auto_close)
        self._fs_store: Dict[str, FSBase] = {}
        self._in_create = False
        self._fs_lock = RLock()

    def create_fs(self, root: str) -> FSBase:
        """create a PyFileSystem instance from `root`. `root` is in the
        format of `/` if local path, else `<scheme>://<netloc>`.

        :param root: `/` if local path, else `<scheme>://<netloc>`
        """
        if root.startswith("temp://"):
            return tempfs.TempFS(root[len("temp://") :])
        if root.startswith("mem://"):
            return memoryfs.MemoryFS()
        return open_fs(root)

    def read_text(self, path: str) -> str:
        """Read a whole text file

        :param path: absolute path or url
        :return: file content
        """
        return self.readtext(path)

    def write_text(self, path: str, content: str) -> None:
        """Write a text file, creating parent folders as needed

        :param path: absolute path or url
        :param content: file content
        """
        sub_fs, sub_path = self._delegate(path)
        parent = fs.path.dirname(sub_path)
        if parent not in ["", "/"]:
            # the mount itself can't create nested folders of a mounted fs
            sub_fs.makedirs(parent, recreate=True)
        sub_fs.writetext(sub_path, content)

    def _delegate(self, path) -> Tuple[FSBase, str]:
        with self._fs_lock:
            if self._in_create:  # pragma: no cover
                return super()._delegate(path)
            self._in_create = True
            try:
                fp = _FSPath(path)
                if fp.root not in self._fs_store:
                    self._fs_store[fp.root] = self.create_fs(fp.root)
                    self.mount(to_uuid(fp.root), self._fs_store[fp.root])
            finally:
                self._in_create = False
        m_path = to_uuid(fp.root) + "/" + fp.relative_path
        return super()._delegate(m_path)


class _FSPath(object):
    def __init__(self, path: str):
        if path is None or path == "":
            raise ValueError("path can't be None or empty")
        if path.startswith("file://"):
            path = path[len("file://") - 1 :]
        if path.startswith("/"):
            self._scheme = ""
            self._root = "/"
            self._path = os.path.abspath(path).lstrip("/")
            return
        uri = urlparse(path)
        if uri.scheme == "":
            raise ValueError(
                f"invalid {path}, must be abs path either local or with scheme"
            )
        if uri.netloc == "":
            raise ValueError(f"invalid path {path}")
        self._scheme = uri.scheme
        self._root = uri.scheme + "://" + uri.netloc
        self._path = uri.path.lstrip("/")

    @property
    def scheme(self) -> str:
        return self._scheme

    @property
    def root(self) -> str:
        return self._root

    @property
    def relative_path(self) -> str:
        return self._path
