#include "filtra/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace filtra {

nlohmann::json to_json(PointSet a)
{
    return a.points();
}

nlohmann::json to_json(const SetFamily& fam)
{
    std::vector<std::vector<int>> lists;
    lists.reserve(fam.size());
    for (PointSet s : fam.sets()) {
        lists.push_back(s.points());
    }
    std::sort(lists.begin(), lists.end());
    return lists;
}

nlohmann::json to_json(const Topology& t)
{
    return nlohmann::json{{"n", t.ground().size()}, {"opens", to_json(t.opens())}};
}

PointSet point_set_from_json(const nlohmann::json& j, GroundSet ground)
{
    if (!j.is_array()) {
        throw InputError("a set must be a JSON array of point indices");
    }
    std::uint64_t bits = 0;
    for (const auto& p : j) {
        if (!p.is_number_integer()) {
            throw InputError("point indices must be integers");
        }
        const auto idx = p.get<long long>();
        if (idx < 0 || idx >= ground.size()) {
            throw InputError("point index " + std::to_string(idx) + " outside ground of size " +
                             std::to_string(ground.size()));
        }
        bits |= std::uint64_t{1} << idx;
    }
    return PointSet{bits};
}

Topology topology_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("opens")) {
        throw InputError("topology JSON needs fields \"n\" and \"opens\"");
    }
    if (!j["n"].is_number_integer()) {
        throw InputError("\"n\" must be an integer");
    }
    const GroundSet ground{static_cast<int>(j["n"].get<long long>())};
    if (!j["opens"].is_array()) {
        throw InputError("\"opens\" must be an array");
    }
    std::vector<std::uint64_t> masks;
    for (const auto& s : j["opens"]) {
        masks.push_back(point_set_from_json(s, ground).bits());
    }
    return Topology::from_opens(SetFamily(ground, std::move(masks)));
}

} // namespace filtra
