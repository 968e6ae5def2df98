"""Type stubs for the compiled kernel extension."""

RF_TOL: float
SERIES_TOL: float
AGM_TOL: float

def rf(x: complex, y: complex, z: complex) -> complex: ...
def agm(a: float, b: float) -> float: ...
def ellipk_agm(k: float) -> float: ...
def hyp2f1_half_series(x: float) -> float: ...
def ellip_f_strip(phi: complex, k: float) -> complex: ...
def ellip_f_real(alpha: float, k: float) -> float: ...
def cassini_alpha(z: complex, b: float, ksq: float) -> float: ...
