#pragma once

#include <stdexcept>
#include <string>

namespace entvol {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_pseudo_anosov : std::runtime_error {
    explicit not_pseudo_anosov(const std::string& what) : std::runtime_error(what) {}
};

struct not_primitive : std::runtime_error {
    explicit not_primitive(const std::string& what) : std::runtime_error(what) {}
};

struct internal_gluing_error : std::logic_error {
    explicit internal_gluing_error(const std::string& what) : std::logic_error(what) {}
};

struct empty_polytope : std::runtime_error {
    explicit empty_polytope(const std::string& what) : std::runtime_error(what) {}
};

struct solver_no_convergence : std::runtime_error {
    solver_no_convergence(const std::string& what, double grad_norm)
        : std::runtime_error(what), final_gradient_norm(grad_norm) {}
    double final_gradient_norm;
};

struct degenerate_geometry : std::runtime_error {
    explicit degenerate_geometry(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entvol
