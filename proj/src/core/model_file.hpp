#pragma once

#include "filtered_complex.hpp"
#include "invariant_complex.hpp"
#include "lefschetz.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ksseq {

inline constexpr const char* kModelFormat = "ksseq-model/1";

enum class ModelKind { Invariant, FilteredComplex };

/// Raw data of a hand-built filtered complex (coordinate filtration by levels).
struct FilteredComplexData {
    std::vector<std::size_t> chain_dims;
    std::vector<Matrix> d;
    std::vector<std::vector<unsigned>> levels;
    std::optional<unsigned> length;

    friend bool operator==(const FilteredComplexData&, const FilteredComplexData&) = default;
};

/// Contents of a model file. Invariant models carry (base, s, lambdas); filtered-complex
/// models carry `raw`.
struct Model {
    ModelKind kind = ModelKind::Invariant;
    std::string name;
    std::string description;
    std::optional<std::uint64_t> seed;

    LefschetzModule base;
    unsigned s = 0;
    std::vector<Rational> lambdas;

    FilteredComplexData raw;

    InvariantComplex build_invariant() const;
    /// The filtered complex the engine runs on, for either kind.
    FilteredComplex build_complex() const;

    friend bool operator==(const Model&, const Model&) = default;
};

/// Parses and validates model text. Throws ParseError naming the offending field, or
/// MalformedComplex for a filtered complex that violates the axioms.
Model parse_model(std::string_view text);
/// Throws IoError when the file cannot be read, otherwise as parse_model.
Model load_model(const std::string& path);
/// Pretty-printed JSON with a fixed key order; parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& m);

std::vector<std::string> preset_names();
/// Throws NotFound for an unknown name.
Model preset_model(std::string_view name);

struct GenerateOptions {
    std::uint64_t seed = 0;
    unsigned n = 1;
    unsigned s = 1;
    std::size_t max_primitive_dim = 2;
    StructureType type = StructureType::S;
    /// Overrides the lambdas implied by `type`.
    std::optional<std::vector<Rational>> lambdas;
};

inline constexpr unsigned kMaxGenerateN = 6;
inline constexpr unsigned kMaxGenerateS = 4;
inline constexpr std::size_t kMaxGeneratePrimitiveDim = 6;

/// Seeded model: S and mixed types use an HLP base; C type uses an HLP or a non-HLP
/// base chosen by the seed. Throws DimensionMismatch for out-of-range parameters.
Model generate_model(const GenerateOptions& opts);

/// "S", "C" or "mixed" (case-insensitive). Throws ParseError otherwise.
StructureType parse_structure_type(std::string_view text);

} // namespace ksseq
