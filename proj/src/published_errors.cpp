#include <telegraph/oracle.hpp>

#include <stdexcept>

namespace telegraph
{

namespace
{

// Absolute errors at t = 1, columns n = 10..15.
const std::vector<PublishedRow> example1_rows{
    {0.1,
     {8.84E-06, 1.49E-06, 2.32E-07, 3.34E-08, 4.48E-09, 5.64E-10},
     {2.44E-05, 2.87E-04, 3.24E-06, 4.42E-06, 2.71E-06, 2.16E-08},
     {1.54E-05, 3.51E-05, 1.92E-05, 2.90E-05, 3.84E-07, 6.47E-07}},
    {0.3,
     {1.80E-05, 3.04E-06, 4.72E-07, 6.81E-08, 9.14E-09, 1.15E-09},
     {2.23E-05, 6.14E-05, 6.11E-05, 4.76E-06, 7.66E-08, 2.16E-06},
     {3.54E-04, 4.27E-04, 1.53E-03, 5.33E-07, 3.27E-07, 3.83E-08}},
    {0.5,
     {2.80E-05, 4.71E-06, 7.32E-07, 1.05E-07, 1.42E-08, 1.78E-09},
     {5.11E-04, 6.03E-04, 6.03E-06, 3.88E-06, 6.56E-05, 4.11E-05},
     {3.03E-04, 3.62E-04, 4.16E-05, 7.36E-04, 2.45E-06, 2.74E-07}},
    {0.7,
     {3.91E-05, 6.57E-06, 1.02E-06, 1.47E-07, 1.98E-08, 2.49E-09},
     {6.54E-04, 2.82E-05, 7.15E-03, 4.11E-05, 5.78E-07, 4.33E-06},
     {4.76E-03, 5.67E-05, 5.44E-04, 7.54E-04, 2.14E-05, 2.54E-08}},
    {0.9,
     {5.16E-05, 8.70E-06, 1.35E-06, 1.95E-07, 2.62E-08, 3.29E-09},
     {6.23E-04, 4.65E-03, 7.73E-04, 5.22E-05, 6.25E-07, 6.15E-07},
     {3.90E-03, 3.32E-04, 4.51E-05, 3.12E-06, 5.32E-06, 3.41E-06}},
};

const std::vector<PublishedRow> example2_rows{
    {0.1,
     {4.12E-10, 4.12E-10, 2.27E-12, 2.27E-12, 9.46E-15, 9.46E-15},
     {3.54E-09, 2.23E-08, 4.01E-09, 4.90E-10, 7.21E-12, 6.87E-11},
     {2.04E-07, 3.64E-07, 3.66E-10, 2.11E-11, 5.99E-11, 7.33E-09}},
    {0.3,
     {8.09E-10, 8.09E-10, 4.45E-12, 4.45E-12, 1.86E-14, 1.86E-14},
     {6.64E-08, 5.33E-07, 3.49E-10, 1.13E-10, 2.18E-11, 4.21E-11},
     {6.72E-08, 6.97E-09, 2.19E-10, 2.91E-11, 3.02E-10, 2.99E-12}},
    {0.5,
     {1.17E-09, 1.17E-09, 6.45E-12, 6.45E-12, 2.69E-14, 2.69E-14},
     {3.06E-05, 3.91E-07, 5.03E-10, 4.51E-11, 6.91E-10, 3.42E-10},
     {3.77E-07, 5.64E-06, 3.16E-10, 4.18E-10, 3.02E-11, 7.11E-11}},
    {0.7,
     {1.49E-09, 1.49E-09, 8.19E-12, 8.19E-12, 3.42E-14, 3.42E-14},
     {3.33E-06, 5.55E-06, 6.67E-10, 5.61E-08, 3.91E-11, 7.98E-10},
     {6.54E-06, 3.96E-06, 4.88E-09, 7.98E-10, 6.22E-10, 3.90E-12}},
    {0.9,
     {1.75E-09, 1.75E-09, 9.61E-12, 9.61E-12, 4.01E-14, 4.01E-14},
     {6.32E-06, 4.36E-06, 7.21E-09, 8.19E-10, 2.18E-10, 2.66E-11},
     {3.55E-06, 3.28E-06, 5.27E-10, 6.03E-09, 2.80E-09, 4.18E-10}},
};

const std::vector<PublishedRow> example3_rows{
    {0.1,
     {1.13E-09, 9.48E-11, 7.33E-12, 5.26E-13, 3.52E-14, 2.21E-15},
     {2.04E-07, 3.47E-10, 4.02E-10, 7.04E-11, 4.41E-10, 1.49E-12},
     {2.44E-08, 5.97E-09, 3.83E-09, 6.48E-10, 3.28E-11, 4.47E-10}},
    {0.3,
     {9.53E-09, 7.99E-10, 6.18E-11, 4.43E-12, 2.97E-13, 1.86E-14},
     {2.42E-07, 1.72E-08, 5.24E-08, 3.04E-10, 2.72E-11, 3.16E-10},
     {3.07E-06, 7.92E-07, 2.47E-09, 2.82E-09, 6.21E-10, 2.45E-12}},
    {0.5,
     {2.31E-08, 1.94E-09, 1.50E-10, 1.08E-11, 7.20E-13, 4.51E-14},
     {5.11E-05, 3.64E-07, 6.12E-07, 4.63E-10, 2.57E-09, 6.77E-08},
     {4.37E-06, 5.23E-06, 4.69E-08, 6.99E-08, 6.02E-09, 4.92E-09}},
    {0.7,
     {3.67E-08, 3.08E-09, 2.38E-10, 1.71E-11, 1.14E-12, 7.17E-14},
     {8.20E-06, 7.87E-06, 7.74E-06, 3.42E-09, 2.11E-09, 7.52E-11},
     {4.65E-05, 4.43E-07, 4.04E-08, 5.11E-08, 7.06E-10, 3.82E-10}},
    {0.9,
     {4.51E-08, 3.78E-09, 2.92E-10, 2.10E-11, 1.40E-12, 8.81E-14},
     {4.06E-07, 3.87E-07, 4.21E-08, 4.01E-06, 3.93E-09, 3.01E-10},
     {6.27E-06, 5.90E-07, 5.64E-09, 1.23E-09, 6.73E-07, 4.25E-08}},
};

} // namespace

const std::vector<PublishedRow> &published_errors(std::string_view builtin)
{
    if (builtin == "example1") {
        return example1_rows;
    }
    if (builtin == "example2") {
        return example2_rows;
    }
    if (builtin == "example3") {
        return example3_rows;
    }
    throw std::invalid_argument("no published errors for '" + std::string(builtin) + "'");
}

} // namespace telegraph
