# flake8: noqa
from samuel.utils.assertion import assert_arg_not_none, assert_or_throw
from samuel.utils.hash import to_uuid
from samuel.utils.threading import RunOnce
