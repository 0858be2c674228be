#include "endowlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "endowlab/error.hpp"

namespace endowlab {

namespace {

std::map<std::string, std::size_t Limits::*> fields() {
    return {
        {"cohen_D", &Limits::cohen_index},  {"measure_k", &Limits::measure_k}, {"exhaustive", &Limits::exhaustive},
        {"points", &Limits::points},        {"base", &Limits::base},           {"poset", &Limits::poset},
        {"levels", &Limits::levels},        {"clause3_budget", &Limits::clause3_budget},
        {"families", &Limits::families},
    };
}

}  // namespace

Limits Limits::parse(std::string_view text, Limits base_limits) {
    const auto table = fields();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw UsageError("bounds item '" + std::string(item) + "' is not key=value");
        const auto it = table.find(std::string(item.substr(0, eq)));
        if (it == table.end()) throw UsageError("unknown bounds key '" + std::string(item.substr(0, eq)) + "'");
        const std::string_view digits = item.substr(eq + 1);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw UsageError("bounds value '" + std::string(digits) + "' is not a natural number");
        base_limits.*(it->second) = value;
    }
    return base_limits;
}

const Limits& Limits::current() {
    static const Limits limits = [] {
        const char* env = std::getenv("ENDOWLAB_BOUNDS");
        return env ? parse(env, Limits{}) : Limits{};
    }();
    return limits;
}

std::string Limits::describe() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, member] : fields()) {
        out << (first ? "" : ",") << key << '=' << this->*member;
        first = false;
    }
    return out.str();
}

}  // namespace endowlab
