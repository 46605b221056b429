from .poly import MVPoly, poly_gcd
from .ratfunc import RatFunc, to_ratfunc
from .parse import ParseError, poly_parse, ratfunc_parse, format_poly, format_ratfunc

__all__ = [
    "MVPoly", "RatFunc", "ParseError", "poly_gcd", "to_ratfunc",
    "poly_parse", "ratfunc_parse", "format_poly", "format_ratfunc",
]
