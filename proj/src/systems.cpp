#include "adic/systems.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adic/example_ab.hpp"

namespace adic {

namespace {

using nlohmann::json;

LevelWords parse_level(const json& j) {
    LevelWords lw;
    if (!j.contains("words") || !j["words"].is_array())
        throw Error("level entry needs a 'words' array");
    for (const auto& w : j["words"]) lw.words.push_back(parse_word(w.get<std::string>()));
    return lw;
}

}  // namespace

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw InvalidWordError("empty token in word '" + text + "'");
            word.push_back(std::stoi(tok));
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw InvalidWordError("bad letter '" + std::string(1, ch) + "' in word '" +
                                       text + "'");
            word.push_back(ch - '0');
        }
    }
    if (word.empty()) throw InvalidWordError("empty word");
    return word;
}

std::string word_to_string(const std::vector<int>& word) {
    bool digits = true;
    for (int letter : word)
        if (letter > 9) digits = false;
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (digits) {
            out += static_cast<char>('0' + word[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(word[i]);
        }
    }
    return out;
}

TowerSystem load_system_json(const std::string& json_text) {
    json j = json::parse(json_text);
    std::string gen = j.value("generator", "explicit");
    int depth = j.value("depth", 0);

    if (gen == "odometer") return make_odometer();
    if (gen == "example-ab") return example_ab::build_example(depth);

    std::vector<LevelWords> levels;
    if (!j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
        throw Error("system spec needs a non-empty 'levels' array");
    for (const auto& lv : j["levels"]) levels.push_back(parse_level(lv));

    if (gen == "explicit") return TowerSystem(explicit_source(std::move(levels)));
    if (gen == "periodic") {
        int period = j.value("period", static_cast<int>(levels.size()));
        return TowerSystem(periodic_source(std::move(levels), period));
    }
    throw Error("unknown generator '" + gen + "'");
}

TowerSystem load_system(const std::string& name_or_path) {
    if (name_or_path == "odometer") return make_odometer();
    if (name_or_path == "example-ab") return example_ab::build_example(0);
    std::ifstream in(name_or_path);
    if (!in) throw Error("cannot open system spec '" + name_or_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_system_json(ss.str());
}

std::string system_to_json(const TowerSystem& sys, int depth) {
    json j;
    j["generator"] = "explicit";
    json levels = json::array();
    for (int n = 1; n <= depth; ++n) {
        json words = json::array();
        for (const auto& w : sys.level(n).words) words.push_back(word_to_string(w));
        levels.push_back(json{{"words", words}});
    }
    j["levels"] = levels;
    return j.dump(2);
}

}  // namespace adic
