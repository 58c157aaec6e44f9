#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "replab/avoidance.hpp"
#include "replab/morphism.hpp"

namespace replab {

/// Named morphisms. The built-in registry holds f, g1, g2, g3, h1, h2 and the
/// composites g = g1∘g2∘g3 (1560-uniform) and h = h1∘h2 (252-uniform).
class MorphismRegistry {
  public:
    MorphismRegistry() = default;
    explicit MorphismRegistry(std::vector<UniformMorphism> entries);

    static const MorphismRegistry& builtin();

    /// Reads a JSON array of {name, width, source_alphabet, target_alphabet,
    /// images}. Composites g and h are added when their factors are present
    /// and the file does not define them itself.
    static MorphismRegistry load(const std::filesystem::path& path);
    static MorphismRegistry from_json_text(std::string_view text);

    /// Serialised form of the non-composite entries, in load() format.
    std::string to_json_text() const;

    /// Throws UnknownMorphism.
    const UniformMorphism& find(std::string_view name) const;
    bool contains(std::string_view name) const;

    const std::vector<UniformMorphism>& entries() const noexcept { return entries_; }

  private:
    void add_composites();

    std::vector<UniformMorphism> entries_;
};

/// Spec that the named morphism's images are meant to avoid (f, g and h only).
std::optional<AvoidanceSpec> target_spec(std::string_view name);

/// Length-n prefix of m(w) for w the squarefree ternary fixed point, using
/// only as many source letters as needed. Throws UnknownMorphism.
Word generate_avoiding(std::string_view name, std::size_t n,
                       const MorphismRegistry& registry = MorphismRegistry::builtin());
Word generate_avoiding(const UniformMorphism& m, std::size_t n);

}  // namespace replab
