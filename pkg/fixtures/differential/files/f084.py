import kazoo.client as helper
y = []; import os.path as gamma; import kazoo.client as run
import yaml as run, os as Thing
# import commented_out
