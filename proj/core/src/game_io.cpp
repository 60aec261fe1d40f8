#include "gameprice/game_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gameprice {

namespace {

using json = nlohmann::json;

double number_at(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("outcome " + std::to_string(index) + " is missing \"" + key + "\"", 0);
    }
    if (!it->is_number()) {
        throw ParseError("outcome " + std::to_string(index) + " field \"" + key +
                             "\" must be a number",
                         0);
    }
    return it->get<double>();
}

}  // namespace

Game load_spec(std::string_view text, const LoadOptions& options) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed game spec: ") + e.what(), e.byte);
    }

    if (!doc.is_object()) throw ParseError("game spec must be a JSON object", 0);

    std::string label;
    if (auto it = doc.find("label"); it != doc.end() && !it->is_null()) {
        if (!it->is_string()) throw ParseError("\"label\" must be a string", 0);
        label = it->get<std::string>();
    }

    auto outcomes_it = doc.find("outcomes");
    if (outcomes_it == doc.end() || !outcomes_it->is_array()) {
        throw ParseError("game spec needs an \"outcomes\" array", 0);
    }

    std::vector<Outcome> outcomes;
    outcomes.reserve(outcomes_it->size());
    std::size_t index = 0;
    for (const json& item : *outcomes_it) {
        if (!item.is_object()) {
            throw ParseError("outcome " + std::to_string(index) + " must be an object", 0);
        }
        outcomes.push_back({number_at(item, "payout", index), number_at(item, "prob", index)});
        ++index;
    }

    std::optional<double> floor;
    if (auto it = doc.find("support_floor"); it != doc.end() && !it->is_null()) {
        if (!it->is_number()) throw ParseError("\"support_floor\" must be a number", 0);
        floor = it->get<double>();
    }

    Game game(std::move(outcomes), std::move(label), floor);
    if (options.normalize) game = normalized(game);
    require_valid(game);
    return game;
}

Game load_spec_file(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read game spec " + path.string(), 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec(buf.str(), options);
}

std::string save_spec(const Game& game) {
    json doc = json::object();
    if (!game.label().empty()) doc["label"] = game.label();
    json outcomes = json::array();
    for (const Outcome& o : game.outcomes()) {
        outcomes.push_back({{"payout", o.payout}, {"prob", o.prob}});
    }
    doc["outcomes"] = std::move(outcomes);
    if (game.support_floor()) doc["support_floor"] = *game.support_floor();
    return doc.dump(2) + "\n";
}

}  // namespace gameprice
