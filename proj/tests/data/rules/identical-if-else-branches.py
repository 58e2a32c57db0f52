# --- positive
def pick(flag, a):
    if flag:
        return a
    else:
        return a
# --- positive
def update(flag, store, key):
    if flag > 0:
        store[key] = 1
        log(key)
    else:
        store[key] = 1
        log(key)
# --- positive
def label(x):
    if x is None:
        name = "none"
    else:
        name = "none"
    return name
# --- negative
def pick(flag, a, b):
    if flag:
        return a
    else:
        return b
# --- negative
def pick(flag, a):
    if flag:
        return a
    return a
# --- negative
def update(flag, store, key):
    if flag:
        store[key] = 1
    else:
        store[key] = 2
