#ifndef GAMEPRICE_TOOLS_REPORT_HPP
#define GAMEPRICE_TOOLS_REPORT_HPP

#include <string>

#include <json.hpp>

namespace gameprice::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints a JSON document with every floating-point number written
/// to 17 significant digits. Non-finite numbers are written as null.
std::string render_json(const Json& doc);

/// %.17g formatting shared by the JSON and CSV writers.
std::string format_number(double x);

}  // namespace gameprice::cli

#endif  // GAMEPRICE_TOOLS_REPORT_HPP
