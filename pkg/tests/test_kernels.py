import pytest

from modgroup import _pykernels, kernels


def test_default_backend_is_available():
    assert kernels.DEFAULT in kernels.available()
    assert kernels.get().NAME == kernels.DEFAULT
    with pytest.raises(ValueError):
        kernels.get("fortran")


@pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernels not built")
@pytest.mark.parametrize("prefix", ["", "U", "SUS", "UUSU"])
def test_backends_agree(prefix):
    c = kernels.get("cython")
    assert c.enumerate_identity(15, prefix) == _pykernels.enumerate_identity(15, prefix)
    assert c.enumerate_pda(14, prefix) == _pykernels.enumerate_pda(14, prefix)


@pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernels not built")
def test_reduced_backends_agree():
    assert kernels.get("cython").count_reduced(10) == _pykernels.count_reduced(10)


@pytest.mark.parametrize("backend", kernels.available())
def test_no_pda_mismatches(backend):
    _, _, mismatches = kernels.get(backend).enumerate_pda(14)
    assert mismatches == 0


def test_prefix_beyond_length_is_empty():
    pairs, prim = _pykernels.enumerate_identity(2, "UUU")
    assert all(v == 0 for row in pairs for v in row)


def test_fallback_selected_without_extension():
    import subprocess
    import sys
    code = ("import sys; sys.modules['modgroup._ckernels'] = None\n"
            "from modgroup import kernels, enumeration\n"
            "assert kernels.DEFAULT == 'python', kernels.DEFAULT\n"
            "assert enumeration.count_identity(13) == 286\n")
    subprocess.run([sys.executable, "-c", code], check=True)
