data = open("/no/such/file_xyz.txt").read()
print(data)
