# flake8: noqa
from samuel.collections.dict import ParamDict
from samuel.collections.fs import FileSystem
