#ifndef DNC_INSTANCE_HPP
#define DNC_INSTANCE_HPP

#include <vector>

#include "dnc/graph.hpp"

namespace dnc {

struct ObjectSpec {
    std::vector<int> loc;  // connected, nonempty vertex set
    Int cost;              // scaled money, may be negative
    Int radius;            // scaled, nonnegative
};

struct ClientSpec {
    int placement = 0;
    Int sensitivity;  // scaled, may be negative
    Int prize;        // scaled money, may be negative
};

/// Raw problem instance as loaded from disk or produced by a reduction.
/// All decimal quantities are integers scaled by `scale`.
struct Instance {
    int vertex_count = 0;
    std::vector<std::vector<int>> rotations;
    std::vector<WeightedEdgeInput> edges;
    std::vector<ObjectSpec> objects;
    std::vector<ClientSpec> clients;
    int k = 0;
    Int scale = 1000000;
};

inline void validate_instance(const Instance& inst) {
    if (inst.vertex_count <= 0)
        throw Error(ErrorCode::MalformedInstance, "instance needs at least one vertex");
    if (inst.k < 0) throw Error(ErrorCode::MalformedInstance, "negative budget k");
    if (inst.scale <= 0) throw Error(ErrorCode::MalformedInstance, "non-positive scale");
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        const auto& o = inst.objects[i];
        if (o.loc.empty())
            throw Error(ErrorCode::MalformedInstance,
                        "object " + std::to_string(i) + " has empty location");
        for (int v : o.loc)
            if (v < 0 || v >= inst.vertex_count)
                throw Error(ErrorCode::MalformedInstance,
                            "object " + std::to_string(i) + " location out of range");
        if (o.radius < 0)
            throw Error(ErrorCode::MalformedInstance,
                        "object " + std::to_string(i) + " has negative radius");
    }
    for (std::size_t i = 0; i < inst.clients.size(); ++i) {
        const auto& c = inst.clients[i];
        if (c.placement < 0 || c.placement >= inst.vertex_count)
            throw Error(ErrorCode::MalformedInstance,
                        "client " + std::to_string(i) + " placement out of range");
    }
}

}  // namespace dnc

#endif
