pass  # import trailing_decoy
z = (1,
     2,
     3)
try:
    import i3 as delta
except ImportError:
    fallback = None
