from functionals.covering import (
    CoveringBudget,
    Exactness,
    FunctionalResult,
    Mode,
    alpha_k,
    eta_km,
    eta_star_k,
    gamma_m,
    gamma_star,
    isolation,
    unbounded_functionals,
)
from functionals.errors import BudgetInvalid, ExactTooLarge
