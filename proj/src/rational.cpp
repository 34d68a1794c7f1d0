#include "dualpolar/rational.hpp"

#include "dualpolar/error.hpp"

namespace dualpolar {

std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw Error(Errc::BadInput, "not a rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace dualpolar
