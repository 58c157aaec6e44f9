#include "replab/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "replab/error.hpp"

namespace replab {

namespace {

struct Table {
    const char* name;
    int target_alphabet;
    std::vector<const char*> images;
};

// Image tables, transcribed symbol for symbol. data/morphisms.json carries the
// same data; a test keeps the two in agreement.
const std::vector<Table>& tables() {
    static const std::vector<Table> kTables = {
        {"f", 2, {"0010111010", "0010101110", "0011101010"}},
        {"g1",
         2,
         {"0011010010110", "0011010110010", "0011011001011", "0100110110010", "0110100101100",
          "1001101011001", "1001101100101", "1010011011001"}},
        {"g2",
         8,
         {"03523503523453461467", "03523503523453467167", "16703523503523461467",
          "03523503523461467167"}},
        {"g3", 4, {"010203", "010313", "021013"}},
        {"h1",
         2,
         {"00110100101100", "00110100110010", "01001100101100", "10011011001011",
          "11010011011001"}},
        {"h2", 5, {"032303241403240314", "032314041403240314", "032414032303240314"}},
    };
    return kTables;
}

UniformMorphism from_table(const Table& t) {
    std::vector<Word> images;
    for (const char* img : t.images) images.push_back(Word::parse(img, t.target_alphabet));
    return UniformMorphism(t.name, t.target_alphabet, std::move(images));
}

bool is_composite(std::string_view name) { return name == "g" || name == "h"; }

}  // namespace

MorphismRegistry::MorphismRegistry(std::vector<UniformMorphism> entries)
    : entries_(std::move(entries)) {
    add_composites();
}

void MorphismRegistry::add_composites() {
    if (!contains("g") && contains("g1") && contains("g2") && contains("g3")) {
        entries_.push_back(compose(find("g1"), compose(find("g2"), find("g3"))).renamed("g"));
    }
    if (!contains("h") && contains("h1") && contains("h2")) {
        entries_.push_back(compose(find("h1"), find("h2")).renamed("h"));
    }
}

const MorphismRegistry& MorphismRegistry::builtin() {
    static const MorphismRegistry kBuiltin = [] {
        std::vector<UniformMorphism> entries;
        for (const auto& t : tables()) entries.push_back(from_table(t));
        return MorphismRegistry(std::move(entries));
    }();
    return kBuiltin;
}

MorphismRegistry MorphismRegistry::from_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("registry: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::Parse, "registry: expected a JSON array");
    std::vector<UniformMorphism> entries;
    try {
        for (const auto& item : doc) {
            const auto name = item.at("name").get<std::string>();
            const int target = item.at("target_alphabet").get<int>();
            std::vector<Word> images;
            for (const auto& img : item.at("images")) {
                images.push_back(Word::parse(img.get<std::string>(), target));
            }
            UniformMorphism m(name, target, std::move(images));
            if (m.width() != item.at("width").get<std::size_t>() ||
                m.source_alphabet() != item.at("source_alphabet").get<int>()) {
                throw Error(ErrorCode::InvalidMorphism,
                            "registry: declared width/source alphabet of " + name +
                                " do not match its images");
            }
            entries.push_back(std::move(m));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("registry: ") + e.what());
    }
    return MorphismRegistry(std::move(entries));
}

MorphismRegistry MorphismRegistry::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open registry " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string MorphismRegistry::to_json_text() const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& m : entries_) {
        if (is_composite(m.name())) continue;
        nlohmann::json images = nlohmann::json::array();
        for (const auto& img : m.images()) images.push_back(img.to_string());
        doc.push_back({{"name", m.name()},
                       {"width", m.width()},
                       {"source_alphabet", m.source_alphabet()},
                       {"target_alphabet", m.target_alphabet()},
                       {"images", images}});
    }
    return doc.dump(2) + "\n";
}

const UniformMorphism& MorphismRegistry::find(std::string_view name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const UniformMorphism& m) { return m.name() == name; });
    if (it == entries_.end()) {
        throw Error(ErrorCode::UnknownMorphism, "unknown morphism '" + std::string(name) + "'");
    }
    return *it;
}

bool MorphismRegistry::contains(std::string_view name) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const UniformMorphism& m) { return m.name() == name; });
}

std::optional<AvoidanceSpec> target_spec(std::string_view name) {
    if (name == "f") return AvoidanceSpec(3, ExponentThreshold(Rational(3), false));
    if (name == "g") return AvoidanceSpec(4, ExponentThreshold(Rational(5, 2), false));
    if (name == "h") return AvoidanceSpec(7, ExponentThreshold(Rational(7, 3), false));
    return std::nullopt;
}

Word generate_avoiding(const UniformMorphism& m, std::size_t n) {
    const std::size_t letters = (n + m.width() - 1) / m.width();
    Word image = apply(m, squarefree_ternary(letters));
    return image.prefix(n);
}

Word generate_avoiding(std::string_view name, std::size_t n, const MorphismRegistry& registry) {
    if (name != "f" && name != "g" && name != "h") {
        throw Error(ErrorCode::UnknownMorphism,
                    "no generator for '" + std::string(name) + "' (expected f, g or h)");
    }
    return generate_avoiding(registry.find(name), n);
}

}  // namespace replab
