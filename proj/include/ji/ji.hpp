#pragma once

#include "ji/comma.hpp"
#include "ji/melody.hpp"
#include "ji/monzo.hpp"
#include "ji/notation.hpp"
#include "ji/text.hpp"
