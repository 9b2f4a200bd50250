from ._core import (
    Algebra,
    Element,
    ParseError,
    Tensor,
    Tree,
    antipode_alpha,
    antipode_alpha_nc,
    antipode_p_e,
    antipode_p_gamma,
    check,
    coaction_e,
    coaction_gamma,
    corruptions,
    decompose_over,
    decompose_under,
    delta_alpha,
    delta_alpha_nc,
    delta_e,
    delta_gamma,
    delta_p_e,
    delta_p_gamma,
    delta_small,
    dyson,
    enumerate_trees,
    graft,
    over,
    sigma,
    suites,
    under,
)

__all__ = [name for name in dir() if not name.startswith("_")]
