import pytest

import cmcells


def test_golden_blocks():
    out = cmcells.blocks(2, 2, c_s=1, c_t=1)
    sizes = sorted((len(b["members"]) for b in out["blocks"]), reverse=True)
    assert sizes == [3, 1, 1]
    heart = next(b for b in out["blocks"] if b["heart"] == [2, 1])
    assert heart["members"] == [[[2], []], [[1], [1]], [[], [1, 1]]]


def test_blocks_with_theta_strings():
    out = cmcells.blocks(3, 2, theta=["1/3", "1/3", "1/3"])
    assert all(len(b["members"]) == 1 for b in out["blocks"])
    assert out["typeJ"] == []


def test_floats_refused():
    with pytest.raises(cmcells.InvalidParameterError):
        cmcells.blocks(2, 2, theta=[0.5, 0.5])
    with pytest.raises(cmcells.InvalidParameterError):
        cmcells.blocks(2, 2, theta="0.5,0.5")
    with pytest.raises(cmcells.InvalidParameterError):
        cmcells.blocks(2, 2, c_s=1.0, c_t=1)


def test_tau_round_trip():
    assert cmcells.tau([0, 0], [[1], []]) == [1, 1]
    assert cmcells.tau_inverse([0, 0], [2]) == [[], [1]]
    assert cmcells.core_of_charge([-1, 1]) == [2, 1]
    assert cmcells.ell_core([2, 1], 2) == [2, 1]
    with pytest.raises(cmcells.WrongCoreError):
        cmcells.tau_inverse([1, -1], [2])


def test_cells_and_verify():
    c = cmcells.cells(2, 0)
    assert c["cells"] == [[[4]], [[3, 1], [2, 2], [2, 1, 1]], [[1, 1, 1, 1]]]
    report = cmcells.verify(max_n=3, max_r=2)
    assert report["passed"] and report["instances_checked"] == 9
    bad = cmcells.verify(max_n=2, max_r=1, inject_fault=True)
    assert not bad["passed"] and "counterexample" in bad


def test_reduce_and_limits():
    red = cmcells.reduce([-1, 2], adjacent=True)
    assert red["typeJ"] == [1]
    assert len(red["adjacent"]) == 2
    with pytest.raises(cmcells.EnumerationLimitError):
        cmcells.blocks(4, 30, theta="1/4,1/4,1/4,1/4", max_size=10)
    assert len(cmcells.P_r(3, 1)) == 10
