#include "hodgehyp/residue.hpp"

#include "hodgehyp/errors.hpp"

namespace hodgehyp {

Residue Residue::of(const Rational& x)
{
    const Rational integral(x.floor(), BigInt(1));
    return Residue(x - integral);
}

GammaRep GammaRep::of(const Residue& r)
{
    return r.is_zero() ? GammaRep(Rational(1)) : GammaRep(r.value());
}

GammaRep GammaRep::from_value(const Rational& value)
{
    if (value <= Rational(0) || value > Rational(1))
        throw Error(ErrorCode::InvalidArgument, "gamma representative " + value.str() + " outside (0,1]");
    return GammaRep(value);
}

} // namespace hodgehyp
