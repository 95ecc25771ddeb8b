import os

from pytest import raises
from samuel.collections.fs import FileSystem, _FSPath


def test__FSPath():
    p = _FSPath("/a//b.ring")
    assert "" == p.scheme
    assert "/" == p.root
    assert "a/b.ring" == p.relative_path

    p = _FSPath("//a.ring")
    assert "" == p.scheme
    assert "/" == p.root
    assert "a.ring" == p.relative_path

    p = _FSPath("file://a/b.ring")
    assert "" == p.scheme
    assert "/" == p.root
    assert "a/b.ring" == p.relative_path

    p = _FSPath("mem://corpus/a.corpus")
    assert "mem" == p.scheme
    assert "mem://corpus" == p.root
    assert "a.corpus" == p.relative_path

    p = _FSPath("temp://a/b")
    assert "temp" == p.scheme
    assert "temp://a" == p.root
    assert "b" == p.relative_path

    raises(ValueError, lambda: _FSPath(None))
    raises(ValueError, lambda: _FSPath(""))
    raises(ValueError, lambda: _FSPath("a.ring"))
    raises(ValueError, lambda: _FSPath("mem://"))


def test_fs(tmpdir):
    p1 = os.path.join(tmpdir, "a")
    p2 = os.path.join(tmpdir, "b")
    assert not os.path.exists(p1)
    fs = MockFS()
    fs.makedirs(p1)
    fs.makedirs(p2)
    assert os.path.exists(p1) and os.path.isdir(p1)
    assert 1 == fs.create_called
    fs.makedirs("mem://x/y")
    fs.makedirs("mem://y/z")
    assert 3 == fs.create_called
    fs.writetext(os.path.join(p1, "a.ring"), "vars x y")
    fs.copy(os.path.join(p1, "a.ring"), "mem://y/z/a.ring")
    assert "vars x y" == fs.readtext("mem://y/z/a.ring")
    assert not fs.exists("mem://y/z/w/a.ring")
    assert 3 == fs.create_called


def test_read_write_text(tmpdir):
    fs = FileSystem()
    fs.write_text("mem://rings/deep/folder/r.ring", "vars x y\nrelations x*y\n")
    assert "vars x y\nrelations x*y\n" == fs.read_text(
        "mem://rings/deep/folder/r.ring"
    )
    fs.write_text("mem://top/r.ring", "vars x")
    assert "vars x" == fs.read_text("mem://top/r.ring")
    # overwrite
    fs.write_text("mem://top/r.ring", "vars y")
    assert "vars y" == fs.read_text("mem://top/r.ring")

    local = os.path.join(str(tmpdir), "out", "report.json")
    fs.write_text(local, "{}")
    with open(local) as f:
        assert "{}" == f.read()
    assert "{}" == fs.read_text(local)


class MockFS(FileSystem):
    def __init__(self):
        super().__init__()
        self.create_called = 0

    def create_fs(self, root):
        self.create_called += 1
        return super().create_fs(root)
