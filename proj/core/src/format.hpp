#ifndef GAMEPRICE_SRC_FORMAT_HPP
#define GAMEPRICE_SRC_FORMAT_HPP

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

namespace gameprice::detail {

inline std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

}  // namespace gameprice::detail

#endif  // GAMEPRICE_SRC_FORMAT_HPP
