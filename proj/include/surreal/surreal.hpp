#pragma once

#include "surreal/error.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/separation.hpp"
#include "surreal/sets.hpp"
#include "surreal/sign_seq.hpp"
