class TrafficLight(Module):
    def types(self):
        self.state_t = BitVector(2)
    def locals(self):
        self.state = BitVector(2)
        self.count = BitVector(6)
        self.pedestrian = Boolean()
        self.sigG = Boolean()
        self.sigY = Boolean()
        self.sigR = Boolean()
    def inputs(self):
        self.pedestrian = Boolean()
    def outputs(self):
        self.sigG = Boolean()
        self.sigY = Boolean()
        self.sigR = Boolean()
    def init(self):
        self.state = BitVector(2)
        self.count = BitVector(6)
        self.pedestrian = Boolean()
        self.sigG = Boolean()
        self.sigY = Boolean()
        self.sigR = Boolean()
    def next(self):
        if self.state == 0:
            self.sigG = False
            self.sigY = False
            self.sigR = True
            self.count = 0
            if self.count < 60:
                self.count += 1
            else:
                self.state = 1
        elif self.state == 1:
            self.sigR = False
            self.sigY = False
            self.sigG = True
            if self.pedestrian:
                if self.count >= 60:
                    self.state = 2
                else:
                    self.state = 3
        elif self.state == 2:
            self.sigG = False
            self.sigY = True
            self.sigR = False
            if self.count < 5:
                self.count += 1
            else:
                self.state = 0
        elif self.state == 3:
            self.sigG = False
            self.sigY = False
            self.sigR = False
            if self.count < 60:
                self.count += 1
            else:
                self.state = 0
