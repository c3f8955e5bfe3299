"""Tricomplex arithmetic, escape-time sets, and their closed-form cross-checks."""

from ._version import __version__
from .algebra import (
    Bicomplex,
    Hyperbolic,
    IdempotentPair3,
    IdempotentQuad,
    SliceSpec,
    Tricomplex,
    embed_slice,
    join3,
    join4,
    mul,
    norm3,
    split3,
    split4,
    tpow,
)
from .realroots import (
    BracketViolation,
    PolyParams,
    RootRecord,
    RootReport,
    classify,
    refine_bounds,
)
from .dynamics import (
    OrbitResult,
    orbit,
    orbit_complex,
    orbit_hyper,
    orbit_many,
    rotate_param,
)
from .sets import (
    ConjectureSpec,
    DiamondSpec,
    OctahedronSpec,
    conjecture_probe,
    discus_contains,
    hausdorff_limit,
    hyperbrot_member,
    m_p,
    perplexbrot_member,
    real_axis_member,
    slice_union_member,
)
from .raster import (
    Raster2D,
    Raster3D,
    Window2D,
    Window3D,
    hausdorff_discrete,
    rasterize2d,
    rasterize3d,
    scan2d,
    scan3d,
)
from .formats import (
    ppm_bytes,
    read_vox,
    vox_bytes,
    write_octahedron_obj,
    write_ppm,
    write_vox,
)
from .verify import CheckRow, SUITE_NAMES, run_suite

__all__ = [
    "__version__",
    "Bicomplex",
    "Hyperbolic",
    "IdempotentPair3",
    "IdempotentQuad",
    "SliceSpec",
    "Tricomplex",
    "embed_slice",
    "join3",
    "join4",
    "mul",
    "norm3",
    "split3",
    "split4",
    "tpow",
    "BracketViolation",
    "PolyParams",
    "RootRecord",
    "RootReport",
    "classify",
    "refine_bounds",
    "OrbitResult",
    "orbit",
    "orbit_complex",
    "orbit_hyper",
    "orbit_many",
    "rotate_param",
    "ConjectureSpec",
    "DiamondSpec",
    "OctahedronSpec",
    "conjecture_probe",
    "discus_contains",
    "hausdorff_limit",
    "hyperbrot_member",
    "m_p",
    "perplexbrot_member",
    "real_axis_member",
    "slice_union_member",
    "Raster2D",
    "Raster3D",
    "Window2D",
    "Window3D",
    "hausdorff_discrete",
    "rasterize2d",
    "rasterize3d",
    "scan2d",
    "scan3d",
    "ppm_bytes",
    "read_vox",
    "vox_bytes",
    "write_octahedron_obj",
    "write_ppm",
    "write_vox",
    "CheckRow",
    "SUITE_NAMES",
    "run_suite",
]
