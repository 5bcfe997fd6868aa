/** @file io.cpp */
namespace dynbase {}
