#ifndef GAMEPRICE_GAME_IO_HPP
#define GAMEPRICE_GAME_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "gameprice/game.hpp"

namespace gameprice {

struct LoadOptions {
    /// Rescale weights to sum to one before validation.
    bool normalize = false;
};

/// Parses a game spec document:
///
///   {"label": "optional", "outcomes": [{"payout": 1, "prob": 0.5}, ...]}
///
/// An optional numeric "support_floor" member carries the essential infimum
/// for quadrature-built games. Throws ParseError on malformed text and
/// ValidationError when the parsed game violates the standing assumptions.
Game load_spec(std::string_view text, const LoadOptions& options = {});

Game load_spec_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Serializes a game; load_spec(save_spec(g)) == g for every valid g.
std::string save_spec(const Game& game);

}  // namespace gameprice

#endif  // GAMEPRICE_GAME_IO_HPP
