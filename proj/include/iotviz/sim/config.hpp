#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include "iotviz/core/canonical_json.hpp"
#include "iotviz/core/error.hpp"

namespace iotviz {

// Every tunable constant of the pipeline. Defaults are the documented
// defaults; a config file only needs to list what it overrides.
struct Config {
    // integration and cooling
    double dt = 1.0;
    double alpha0 = 1.0;
    double alpha_min = 0.001;
    double alpha_decay = 0.0228;
    double velocity_decay = 0.6;  // fraction of velocity retained per tick
    std::int64_t max_ticks = 1000;
    std::uint64_t seed = 42;

    // links
    double signal_link_stiffness = 0.7;
    double structural_link_stiffness = 0.3;
    double adjacency_link_stiffness = 0.2;  // multiplied by hint weight
    double structural_rest_length_m = 1.0;
    double adjacency_rest_length_m = 8.0;
    double anchor_stiffness = 1.0;

    // charges and grouping
    double charge_device = -30.0;
    double charge_room = 0.0;
    double charge_softening_m = 0.1;
    double theta = 0.5;
    double same_room_attraction_k = 0.05;
    double room_repulsion_k = 200.0;
    int threads = 1;

    // floors
    double floor_height_m = 4.0;
    bool floor_pinning = true;
    bool floor_repulsion_enabled = false;
    double floor_repulsion_k = 50.0;

    // bodies
    double device_mass = 1.0;
    double room_mass = 4.0;
    double sensor_radius_m = 0.25;
    double gateway_radius_m = 0.4;
    int collision_iterations = 3;
    double init_radius_m = 30.0;

    // skinning
    bool room_padding_enabled = true;
    double room_padding_min_m = 0.5;
    double room_padding_fraction = 0.1;
    double room_min_extent_m = 1.0;
    double envelope_padding_m = 1.0;
    double slab_thickness_m = 0.1;

    friend bool operator==(const Config&, const Config&) = default;

    void validate() const {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v)) throw ArgumentError(std::string("config: ") + name + " must be > 0");
        };
        auto non_negative = [](double v, const char* name) {
            if (!(v >= 0.0) || !std::isfinite(v))
                throw ArgumentError(std::string("config: ") + name + " must be >= 0");
        };
        positive(dt, "dt");
        positive(alpha0, "alpha0");
        positive(alpha_min, "alpha_min");
        if (!(alpha_min < alpha0)) throw ArgumentError("config: alpha_min must be < alpha0");
        if (!(alpha_decay > 0.0 && alpha_decay < 1.0)) throw ArgumentError("config: alpha_decay must be in (0, 1)");
        if (!(velocity_decay > 0.0 && velocity_decay <= 1.0))
            throw ArgumentError("config: velocity_decay must be in (0, 1]");
        if (max_ticks < 0) throw ArgumentError("config: max_ticks must be >= 0");
        positive(signal_link_stiffness, "signal_link_stiffness");
        positive(structural_link_stiffness, "structural_link_stiffness");
        positive(adjacency_link_stiffness, "adjacency_link_stiffness");
        positive(structural_rest_length_m, "structural_rest_length_m");
        positive(adjacency_rest_length_m, "adjacency_rest_length_m");
        non_negative(anchor_stiffness, "anchor_stiffness");
        if (!std::isfinite(charge_device) || !std::isfinite(charge_room))
            throw ArgumentError("config: charges must be finite");
        positive(charge_softening_m, "charge_softening_m");
        non_negative(theta, "theta");
        non_negative(same_room_attraction_k, "same_room_attraction_k");
        non_negative(room_repulsion_k, "room_repulsion_k");
        if (threads < 1) throw ArgumentError("config: threads must be >= 1");
        positive(floor_height_m, "floor_height_m");
        non_negative(floor_repulsion_k, "floor_repulsion_k");
        positive(device_mass, "device_mass");
        positive(room_mass, "room_mass");
        non_negative(sensor_radius_m, "sensor_radius_m");
        non_negative(gateway_radius_m, "gateway_radius_m");
        if (collision_iterations < 0) throw ArgumentError("config: collision_iterations must be >= 0");
        positive(init_radius_m, "init_radius_m");
        non_negative(room_padding_min_m, "room_padding_min_m");
        non_negative(room_padding_fraction, "room_padding_fraction");
        positive(room_min_extent_m, "room_min_extent_m");
        non_negative(envelope_padding_m, "envelope_padding_m");
        non_negative(slab_thickness_m, "slab_thickness_m");
    }
};

#define IOTVIZ_CONFIG_FIELDS(X)                                                                            \
    X(dt) X(alpha0) X(alpha_min) X(alpha_decay) X(velocity_decay) X(max_ticks) X(seed)                    \
    X(signal_link_stiffness) X(structural_link_stiffness) X(adjacency_link_stiffness)                     \
    X(structural_rest_length_m) X(adjacency_rest_length_m) X(anchor_stiffness) X(charge_device)           \
    X(charge_room) X(charge_softening_m) X(theta) X(same_room_attraction_k) X(room_repulsion_k) X(threads) \
    X(floor_height_m) X(floor_pinning) X(floor_repulsion_enabled) X(floor_repulsion_k) X(device_mass)     \
    X(room_mass) X(sensor_radius_m) X(gateway_radius_m) X(collision_iterations) X(init_radius_m)          \
    X(room_padding_enabled) X(room_padding_min_m) X(room_padding_fraction) X(room_min_extent_m)           \
    X(envelope_padding_m) X(slab_thickness_m)

inline ordered_json to_json(const Config& c) {
    ordered_json j = ordered_json::object();
#define IOTVIZ_PUT(name) j[#name] = c.name;
    IOTVIZ_CONFIG_FIELDS(IOTVIZ_PUT)
#undef IOTVIZ_PUT
    return j;
}

// Config file: a JSON object whose keys are Config field names. Missing
// keys keep their defaults; unknown keys are rejected so typos surface.
inline Config parse_config(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("config: expected a JSON object");
    Config c;
    for (const auto& [key, value] : j.items()) {
        bool matched = false;
        try {
#define IOTVIZ_GET(name)                                         \
    if (key == #name) {                                          \
        using T = decltype(c.name);                              \
        if constexpr (std::is_same_v<T, bool>) {                 \
            if (!value.is_boolean()) throw SchemaError("");      \
        } else if constexpr (std::is_unsigned_v<T>) {            \
            if (!value.is_number_unsigned()) throw SchemaError(""); \
        } else if constexpr (std::is_integral_v<T>) {            \
            if (!value.is_number_integer()) throw SchemaError(""); \
        } else {                                                 \
            if (!value.is_number()) throw SchemaError("");       \
        }                                                        \
        c.name = value.get<T>();                                 \
        matched = true;                                          \
    }
            IOTVIZ_CONFIG_FIELDS(IOTVIZ_GET)
#undef IOTVIZ_GET
        } catch (const SchemaError&) {
            throw SchemaError("config: field '" + key + "' has the wrong type");
        }
        if (!matched) throw SchemaError("config: unknown field '" + key + "'");
    }
    c.validate();
    return c;
}

}  // namespace iotviz
