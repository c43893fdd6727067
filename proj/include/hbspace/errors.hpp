#pragma once

#include <stdexcept>
#include <string>

namespace hbspace {

// Base class for every numeric failure the library reports. category() is a
// stable machine-readable tag; the CLI copies it into error reports verbatim.
class numeric_error : public std::runtime_error {
public:
    numeric_error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

class domain_error : public numeric_error {
public:
    explicit domain_error(const std::string& what) : numeric_error("domain", what) {}
};

class pole_error : public numeric_error {
public:
    explicit pole_error(const std::string& what) : numeric_error("pole", what) {}
};

class non_convergence_error : public numeric_error {
public:
    explicit non_convergence_error(const std::string& what)
        : numeric_error("non_convergence", what) {}
};

class overflow_error : public numeric_error {
public:
    explicit overflow_error(const std::string& what) : numeric_error("overflow", what) {}
};

class singular_weight_error : public numeric_error {
public:
    explicit singular_weight_error(const std::string& what)
        : numeric_error("singular_weight", what) {}
};

class insufficient_data_error : public numeric_error {
public:
    explicit insufficient_data_error(const std::string& what)
        : numeric_error("insufficient_data", what) {}
};

class decay_error : public numeric_error {
public:
    explicit decay_error(const std::string& what) : numeric_error("decay", what) {}
};

}  // namespace hbspace
