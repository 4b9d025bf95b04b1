"""
检查点文件测试
"""

import pytest

from src.core.errors import CheckpointMismatchError
from src.core.search import Checkpoint


def test_new_checkpoint_writes_header(tmp_path):
    path = tmp_path / "run" / "k10.ckpt"
    checkpoint = Checkpoint(path, 10, 5)
    assert path.read_text(encoding="utf-8") == "n=10 seeds=5 version=1\n"
    assert checkpoint.done_indices() == set()


def test_records_persist(tmp_path):
    path = tmp_path / "k10.ckpt"
    checkpoint = Checkpoint(path, 10, 5)
    checkpoint.mark_done(3, 1, 42)
    checkpoint.mark_done(0, 0, 7)

    reloaded = Checkpoint(path, 10, 5)
    assert reloaded.done_indices() == {0, 3}
    assert reloaded.is_done(3)
    assert not reloaded.is_done(1)
    assert reloaded.get(3).nodes == 42


@pytest.mark.parametrize("n, seeds, version", [(12, 5, 1), (10, 6, 1), (10, 5, 2)])
def test_mismatch_raises(tmp_path, n, seeds, version):
    path = tmp_path / "k10.ckpt"
    Checkpoint(path, 10, 5)
    with pytest.raises(CheckpointMismatchError):
        Checkpoint(path, n, seeds, version)


def test_malformed_files_raise(tmp_path):
    path = tmp_path / "bad.ckpt"
    path.write_text("not a header\n", encoding="utf-8")
    with pytest.raises(CheckpointMismatchError):
        Checkpoint(path, 10, 5)

    path.write_text("n=10 seeds=5 version=1\n9 done 1 1\n", encoding="utf-8")
    with pytest.raises(CheckpointMismatchError):
        Checkpoint(path, 10, 5)

    path.write_text("n=10 seeds=5 version=1\n1 done\n", encoding="utf-8")
    with pytest.raises(CheckpointMismatchError):
        Checkpoint(path, 10, 5)
